"""Self-conjugate symbols, odd-part partitions, and psi(q).

A symbol is self-conjugate when its two rows coincide.  Reading the
diagram of a self-conjugate unimodal sequence row by row gives a partition
into odd parts in which every odd value below the largest occurs; that
bijection identifies the k=1 counting series with the classical mock theta
function psi(q).  For k >= 2 the counts equal a signed difference of
decorated odd-part configurations.
"""

from qranks import (
    count_even_part_parity,
    count_self_conjugate,
    enumerate_self_conjugate_symbols,
    even_part_parity_series,
    mock_theta_psi,
    odd_parts_to_self_conjugate,
    self_conjugate_series,
    self_conjugate_to_odd_parts,
    su_sequence,
)

print("Self-conjugate symbols of size 12 and their odd-part partners:")
for sym in enumerate_self_conjugate_symbols(12):
    p = self_conjugate_to_odd_parts(sym)
    seq = su_sequence(sym)
    back = odd_parts_to_self_conjugate(p)
    print(f"  {seq.render():16s} {sym.render():16s} -> {p.render():12s}"
          f" (round trip ok: {back == sym})")

print()
print("psi(q) three ways, coefficients of q^0..q^15:")
for form in ("theta", "pochhammer", "enumerative"):
    print(f"  {form:12s}", mock_theta_psi(15, form).integer_coefficients())

print()
print("Self-conjugate counts for k = 2 equal a signed parity difference of")
print("odd partitions decorated with one marked even value:")
series = self_conjugate_series(2, 16, "raw")
signed = even_part_parity_series(2, 16)
print("  counting series:  ", series.integer_coefficients())
print("  parity difference:", signed.integer_coefficients())
for n in (10, 14, 16):
    with_odd, with_even = count_even_part_parity(n, 2)
    print(f"  n={n}: {with_odd} configurations with odd-many even parts,"
          f" {with_even} with even-many; count = {count_self_conjugate(n, 2)}")
