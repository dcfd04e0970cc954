"""Generalised q-dimensions for diagonal systems: when the one-level
envelope root u(q) is the answer, and when it provably is not.

First system: three maps, p = (4/5, 1/10, 1/10), horizontal ratios
(2/5, 3/10, 3/10), vertical (3/10, 2/5, 3/10).  A sign condition certifies
d_q = u(q) = t1 over the whole range [0, 5], a regime where no closed form
was previously justified for q > 1.

Second system: the swap family, where d_q exceeds u(q) by an explicit
correction and the library brackets it with finite-level estimates.
"""
import affine_spectra as a
from affine_spectra.gendim import gendim_point, generalised_dimension

miao = a.DiagonalSystem(
    (
        a.DiagonalMap(0.4, 0.3),
        a.DiagonalMap(0.3, 0.4, tx=0.5, ty=0.5),
        a.DiagonalMap(0.3, 0.3, tx=0.0, ty=0.6),
    ),
    (0.8, 0.1, 0.1),
)

print(__doc__)
print(f"{'q':>4} {'case':<12} {'u(q)':>10} {'exact':>10} {'cond1':>10}")
for q in (0.0, 0.5, 1.5, 2.0, 3.0, 5.0):
    if abs(q - 1.0) <= 1e-6:
        continue
    pt = gendim_point(miao, q)
    cond = f"{pt.cond1:10.4f}" if pt.cond1 is not None else "        --"
    print(f"{q:4.1f} {pt.case:<12} {pt.u:10.6f} {pt.exact:10.6f} {cond}")
print("(q = 0 gives the affinity dimension of the support, here exactly 1)")

print()
print("Swap family c = 3/4, d = 1/4: the envelope root undershoots for q > 1.")
sys = a.swap_family(0.75, 0.25)
print(f"{'q':>4} {'u(q)':>10} {'strict lower':>13} {'upper':>10} {'dq_k1001':>10}")
for q in (1.5, 2.0, 3.0):
    pt = gendim_point(sys, q, ks=[1001])
    print(f"{q:4.1f} {pt.u:10.6f} {pt.lower:13.6f} {pt.upper:10.6f} {pt.dq_ks[1001]:10.6f}")

q = 2.0
pt = gendim_point(sys, q, ks=[1001])
print()
print(f"Normalised L^q exponent consistent with these values at q = {q}:")
print(f"  tau = dq * (1-q) bracketed in [{pt.upper * (1 - q):.6f}, {pt.lower * (1 - q):.6f}]")
print(f"  D_q of tau = -0.83 would be {generalised_dimension(-0.83, q):.4f}")
