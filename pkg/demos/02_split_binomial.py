"""Split binomial sums: splitting the expansion of (1+x)^k at the midpoint.

For x > 1 the top half dominates the bottom half by a factor that grows like
((1+x)/(2 sqrt x))^k.  The exact big-integer path verifies the sandwich
inequalities behind that rate; the log-space path pushes k into the
thousands without overflow.
"""
from fractions import Fraction

from affine_spectra.split_binomial import growth_limit, sandwich_check, split_ratio

print(__doc__)
for x in (Fraction(3, 2), Fraction(2), Fraction(4)):
    limit = growth_limit(float(x))
    print(f"x = {x}: limit (1+x)/(2 sqrt x) = {limit:.6f}")
    for k in (1, 9, 101, 501, 2001):
        sr = split_ratio(k, x)
        print(f"  k = {k:5d}: ratio^(1/k) = {sr.root:.6f}   deviation = {abs(sr.root - limit):.2e}")

print("Exact sandwich check (big-integer arithmetic), x = 7/2:")
for k in (1, 31, 61):
    rep = sandwich_check(k, Fraction(7, 2))
    print(
        f"  k = {k:2d}: {float(rep.lower_bound):.4e} <= {float(rep.ratio):.4e} "
        f"<= {float(rep.upper_bound):.4e}  ok = {rep.ok}"
    )

print("Small exact values: k=3, x=2 gives 20/7; k=3, x=4 gives 112/13:")
print(f"  {split_ratio(3, Fraction(2)).exact}, {split_ratio(3, Fraction(4)).exact}")
