"""Partitions, Dyson's rank, and Durfee symbols.

A partition of n is a weakly decreasing list of positive parts summing to
n.  Its rank is the largest part minus the number of parts, and its Durfee
symbol records what is left after carving out the largest square inside
the Ferrers diagram: column lengths to the right (top row), row lengths
below (bottom row), subscripted by the square's side.
"""

from qranks import (
    Partition,
    durfee_decompose,
    durfee_recompose,
    dyson_rank,
    enumerate_partitions,
    partition_rank_series,
    partition_series,
    rank_census_partitions,
)

print("The 5 partitions of 4, with rank and Durfee symbol:")
for p in enumerate_partitions(4):
    sym = durfee_decompose(p)
    print(f"  {p.render():12s} rank {dyson_rank(p):+d}   {sym.render()}")

print()
print("Decomposition is reversible:")
p = Partition((5, 4, 4, 2, 1))
sym = durfee_decompose(p)
print(f"  {p.render()} -> {sym.render()} -> {durfee_recompose(sym).render()}")

print()
print("Partition counts from the product generating function:")
series = partition_series(10)
print(" ", series.integer_coefficients())

print()
print("The two-variable rank series refines those counts.  Its q^n")
print("coefficient is a Laurent polynomial in x1 whose x1^m entry is the")
print("number of partitions of n with rank m:")
ranks = partition_rank_series(6)
for n in range(1, 7):
    print(f"  n={n}: {ranks.coefficient(n)!r}")

print()
print("Against the brute-force census at n=6:", rank_census_partitions(6))
