"""Evaluating rank series at roots of unity.

Setting the x variables to roots of unity turns a rank series into a
single q-series with algebraic coefficients.  Fourth roots (1, i, -1, -i)
are evaluated exactly over the Gaussian integers; other rational angles go
through a float path that records a conservative error bound per
coefficient.
"""

from fractions import Fraction

from qranks import (
    RootOfUnityVector,
    marked_unimodal_rank_series,
    partition_rank_series,
    partition_series,
    specialize_exact,
    specialize_numeric,
    unimodal_rank_series,
)

print("Specializing the partition rank series at x1 = 1 recovers p(n):")
r1 = partition_rank_series(12)
at_one = specialize_exact(r1, RootOfUnityVector((Fraction(0, 1),)))
print("  specialized:", at_one.real_coefficients())
print("  partitions: ", partition_series(12).integer_coefficients())

print()
print("The unimodal rank series at x1 = -1 (rank parity signs):")
u1 = unimodal_rank_series(16)
at_minus_one = specialize_exact(u1, RootOfUnityVector((Fraction(1, 2),)))
print("  coefficients:", at_minus_one.real_coefficients())

print()
print("At x1 = i the coefficients are Gaussian integers:")
at_i = specialize_exact(u1, RootOfUnityVector((Fraction(1, 4),)))
print("  (re, im) pairs:", at_i.coeffs[:10])

print()
print("Arbitrary angles use the numeric path; here x = (w, w) with w a")
print("primitive third root of unity, with recorded error bounds:")
uk2 = marked_unimodal_rank_series(2, 12)
numeric = specialize_numeric(uk2, RootOfUnityVector((Fraction(1, 3), Fraction(1, 3))))
for n in range(6, 13):
    z = numeric.coeffs[n]
    print(f"  q^{n}: {z.real:+.6f} {z.imag:+.6f}i  (bound {numeric.error_bounds[n]:.1e})")
