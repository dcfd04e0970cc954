"""Generalised q-dimension machinery for diagonal systems.

The singular-value profile phi^s interpolates between contraction products;
the word sums sum_w phi^t(w)^(1-q) p(w)^q have a k-th-root limit whose unit
root d_q is the natural closed-form candidate for the generalised dimension.
This module evaluates the four one-level roots t1, t2, s1, s2, the piecewise
envelope functions (max and min variants) with their roots u0 and u, finite-k
estimates of d_q, the strict-gap lower bound for the two-map swap family, the
case-split upper bounds, and the equality conditions under which d_q = u(q).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .logspace import LogValue, logsumexp
from .solvers import SolverError, bisect, solve_monotone
from .system import DiagonalMap, DiagonalSystem, detect_swap_family
from .typeclasses import DEFAULT_CLASS_CAP, TypeClassTable

Q_ONE_GUARD = 1e-6
ROOT_TOL = 1e-12
MATCH_TOL = 1e-10

KNOWN_QLT1 = "Known_qlt1"
BOUNDS_QGT1 = "Bounds_qgt1"
EXACT_QGT1 = "Exact_qgt1"

REGIME_SUB1 = "Sub1"
REGIME_MID = "Mid"


def _check_q(q: float) -> None:
    if q < 0:
        raise ValueError("q must be >= 0")
    if abs(q - 1.0) <= Q_ONE_GUARD:
        raise ValueError(f"q = {q} lies in the guard band around 1")


@dataclass(frozen=True)
class SvfExponent:
    """An exponent s in [0, 2] together with its branch of the profile."""

    s: float
    regime: str

    @staticmethod
    def of(s: float) -> "SvfExponent":
        if not 0.0 <= s <= 2.0:
            raise ValueError("piecewise profile regimes cover s in [0, 2]")
        return SvfExponent(s=s, regime=REGIME_SUB1 if s < 1.0 else REGIME_MID)


def svf(log_alpha1: float, log_alpha2: float, s: float) -> LogValue:
    """log-space singular-value profile of a pair alpha1 >= alpha2.

    s in (0,1]: alpha1^s; s in (1,2]: alpha1 * alpha2^(s-1); s > 2 uses the
    area form (alpha1 alpha2)^(s/2); s = 0 gives 1.
    """
    if log_alpha1 < log_alpha2:
        raise ValueError("need log_alpha1 >= log_alpha2")
    if s < 0:
        raise ValueError("s must be >= 0")
    if s == 0.0:
        return LogValue.from_log(0.0)
    if s <= 1.0:
        return LogValue.from_log(s * log_alpha1)
    if s <= 2.0:
        return LogValue.from_log(log_alpha1 + (s - 1.0) * log_alpha2)
    return LogValue.from_log(0.5 * s * (log_alpha1 + log_alpha2))


def _svf_log_array(log_a1: np.ndarray, log_a2: np.ndarray, s: float) -> np.ndarray:
    if s <= 1.0:
        return s * log_a1
    if s <= 2.0:
        return log_a1 + (s - 1.0) * log_a2
    return 0.5 * s * (log_a1 + log_a2)


# ---------------------------------------------------------------------------
# One-level roots and envelope functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FmRoots:
    t1: float
    t2: float
    s1: float
    s2: float


def _logs(sys: DiagonalSystem) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return (
        np.log(np.array(sys.probabilities)),
        np.log(np.array(sys.cs)),
        np.log(np.array(sys.ds)),
    )


def fm_roots(sys: DiagonalSystem, q: float) -> FmRoots:
    """The four one-level roots.

    t1, t2 solve sum p^q r^(t(1-q)) = 1 for r = c resp. d; s1, s2 solve the
    mid-regime analogues sum p^q (r (r' )^(s-1))^(1-q) = 1.  For q > 1 the
    defining sums are increasing in the unknown, for q < 1 decreasing; the
    bisection bracket expands either way.
    """
    _check_q(q)
    log_p, log_c, log_d = _logs(sys)
    omq = 1.0 - q

    def root(fn) -> float:
        return solve_monotone(fn, tol=ROOT_TOL)

    t1 = root(lambda t: logsumexp(q * log_p + t * omq * log_c))
    t2 = root(lambda t: logsumexp(q * log_p + t * omq * log_d))
    s1 = root(lambda s: logsumexp(q * log_p + omq * (log_c + (s - 1.0) * log_d)))
    s2 = root(lambda s: logsumexp(q * log_p + omq * (log_d + (s - 1.0) * log_c)))
    return FmRoots(t1=t1, t2=t2, s1=s1, s2=s2)


VARIANT_MAX = "max"
VARIANT_MIN_FOR_QGT1 = "min-for-qgt1"


def p0_star(sys: DiagonalSystem, t: float, q: float, variant: str = VARIANT_MAX) -> float:
    """The piecewise envelope of the two axis sums at level one.

    variant "max" is the envelope used to define u0 for every q; variant
    "min-for-qgt1" switches max to min when q > 1 (defining u).  Both pieces
    agree at t = 1 by construction.
    """
    _check_q(q)
    if not 0.0 <= t <= 2.0:
        raise ValueError("t must lie in [0, 2]")
    if variant not in (VARIANT_MAX, VARIANT_MIN_FOR_QGT1):
        raise ValueError(f"unknown variant {variant!r}")
    log_p, log_c, log_d = _logs(sys)
    omq = 1.0 - q
    if t < 1.0:
        inner_c = logsumexp(q * log_p + t * omq * log_c)
        inner_d = logsumexp(q * log_p + t * omq * log_d)
    else:
        inner_c = logsumexp(q * log_p + omq * (log_c + (t - 1.0) * log_d))
        inner_d = logsumexp(q * log_p + omq * (log_d + (t - 1.0) * log_c))
    use_min = variant == VARIANT_MIN_FOR_QGT1 and q > 1.0
    chosen = min(inner_c, inner_d) if use_min else max(inner_c, inner_d)
    return math.exp(chosen)


def _envelope_root(sys: DiagonalSystem, q: float, variant: str) -> float:
    """Root of the envelope = 1 on [0, 2]; falls back to 2 when there is no
    crossing (the conventional value)."""

    def g(t: float) -> float:
        return math.log(p0_star(sys, t, q, variant))

    g0, g1, g2 = g(0.0), g(1.0), g(2.0)
    for lo, hi, glo, ghi in ((0.0, 1.0, g0, g1), (1.0, 2.0, g1, g2)):
        if glo == 0.0:
            return lo
        if (glo > 0) != (ghi > 0) or ghi == 0.0:
            return bisect(g, lo, hi, tol=ROOT_TOL)
    return 2.0


def u_roots(sys: DiagonalSystem, q: float) -> tuple[float, float]:
    """(u0, u): roots of the max envelope and of the q-adapted envelope.

    u = u0 for q < 1; u >= u0 for q > 1 (the min envelope crosses later since
    both axis sums are increasing in t there).
    """
    _check_q(q)
    u0 = _envelope_root(sys, q, VARIANT_MAX)
    if q < 1.0:
        return u0, u0
    return u0, _envelope_root(sys, q, VARIANT_MIN_FOR_QGT1)


# ---------------------------------------------------------------------------
# Finite-k estimates of d_q
# ---------------------------------------------------------------------------

def dq_finite_k(
    sys: DiagonalSystem,
    k: int,
    q: float,
    cap: int = DEFAULT_CLASS_CAP,
    t_max: float = 64.0,
) -> float:
    """The t with sum over length-k words of phi^t(w)^(1-q) p(w)^q = 1.

    The word sum collapses over type classes; the profile makes the equation
    piecewise in t but still strictly monotone (increasing for q > 1,
    decreasing for q < 1).  Solved on [0,1], then [1,2], then the area-form
    extension; a root below 0 is reported as the boundary 0.
    """
    _check_q(q)
    table = TypeClassTable(sys, k, cap=cap)
    omq = 1.0 - q
    base = table.log_mult + q * table.log_p

    def f(t: float) -> float:
        return logsumexp(base + omq * _svf_log_array(table.log_alpha1, table.log_alpha2, t))

    f0, f1, f2 = f(0.0), f(1.0), f(2.0)
    increasing = q > 1.0
    ordered = f0 <= f1 + 1e-12 <= f2 + 2e-12 if increasing else f0 >= f1 - 1e-12 >= f2 - 2e-12
    if not ordered:
        raise SolverError(f"word sum is not monotone in t at q={q}")
    for lo, hi, flo, fhi in ((0.0, 1.0, f0, f1), (1.0, 2.0, f1, f2)):
        if flo == 0.0:
            return lo
        if (flo > 0) != (fhi > 0) or fhi == 0.0:
            return bisect(f, lo, hi, tol=ROOT_TOL)
    # no crossing in [0, 2]
    if (increasing and f0 > 0.0) or (not increasing and f0 < 0.0):
        return 0.0  # root would be negative; report the boundary
    lo, hi = 2.0, 4.0
    while (f(hi) > 0) == (f2 > 0):
        lo, hi = hi, hi * 2.0
        if hi > t_max:
            raise SolverError(f"no root of the word sum below t = {t_max}")
    return bisect(f, lo, hi, tol=ROOT_TOL)


# ---------------------------------------------------------------------------
# Swap-family strict lower bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SwapLowerBound:
    value: float
    u: float
    delta: float
    correction: float


def miao_counterexample_lower(c: float, d: float, q: float) -> SwapLowerBound:
    """Strict lower bound for d_q of the two-map swap family at q > 1.

    u solves 2^-q (c^(u(1-q)) + d^(u(1-q))) = 1; with x = (c/d)^(u(q-1)) > 1
    and delta = 2 sqrt(x) / (1 + x) in (0, 1), d_q exceeds u by at least
    2 log(delta) / ((q-1) log(c d)) > 0.
    """
    if not (c > d > 0.0) or c + d > 1.0:
        raise ValueError("swap family needs c > d > 0 and c + d <= 1")
    if not q > 1.0:
        raise ValueError("the strict gap requires q > 1")
    log_c, log_d = math.log(c), math.log(d)
    omq = 1.0 - q

    u = solve_monotone(
        lambda t: -q * math.log(2.0)
        + logsumexp(np.array([t * omq * log_c, t * omq * log_d])),
        tol=ROOT_TOL,
    )
    x = math.exp(u * (q - 1.0) * (log_c - log_d))
    delta = 2.0 * math.sqrt(x) / (1.0 + x)
    if not (0.0 < delta < 1.0):
        raise AssertionError(f"delta must lie in (0,1), got {delta}")
    correction = 2.0 * math.log(delta) / ((q - 1.0) * math.log(c * d))
    value = u + correction
    if not value > u:
        raise AssertionError("the corrected bound must exceed u")
    return SwapLowerBound(value=value, u=u, delta=delta, correction=correction)


# ---------------------------------------------------------------------------
# Case-split upper bounds and the equality conditions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UpperBoundBundle:
    """The applicable upper bounds for d_q at one q > 1.

    u1/u2 apply when u is in [1, 2); v1/v2 when u is in [0, 1) and their
    minimum is <= 1; w1/w2 (built from the ingredients a, b, c_ing, d_ing)
    otherwise.  `upper` is the applicable minimum, 2.0 when u(q) = 2.
    """

    u: float
    case: str
    upper: float
    u1: float | None = None
    u2: float | None = None
    v1: float | None = None
    v2: float | None = None
    w1: float | None = None
    w2: float | None = None
    a: float = 0.0
    b: float = 0.0
    c_ing: float = 0.0
    d_ing: float = 0.0


def _clamp_pos(x: float) -> float:
    return x if x > 0.0 else 0.0


def upper_bounds(
    sys: DiagonalSystem,
    q: float,
    roots: FmRoots | None = None,
    u: float | None = None,
) -> UpperBoundBundle:
    """Dispatch the closed-form upper bounds for d_q on the value of u(q)."""
    _check_q(q)
    if not q > 1.0:
        raise ValueError("upper bounds are stated for q > 1")
    if roots is None:
        roots = fm_roots(sys, q)
    if u is None:
        _, u = u_roots(sys, q)
    log_p, log_c, log_d = _logs(sys)
    omq = 1.0 - q

    w_t1 = np.exp(q * log_p + roots.t1 * omq * log_c)
    w_t2 = np.exp(q * log_p + roots.t2 * omq * log_d)
    a_ing = (1.0 - roots.t1) * math.fsum(w_t1 * (log_d - log_c)) / math.fsum(w_t1 * log_d)
    b_ing = (1.0 - roots.t2) * math.fsum(w_t2 * (log_c - log_d)) / math.fsum(w_t2 * log_c)
    c_ing = math.fsum(w_t1 * (log_c - log_d)) / math.fsum(w_t1 * log_c)
    d_ing = math.fsum(w_t2 * (log_d - log_c)) / math.fsum(w_t2 * log_d)

    if u >= 2.0:
        return UpperBoundBundle(
            u=u, case="trivial", upper=2.0,
            a=a_ing, b=b_ing, c_ing=c_ing, d_ing=d_ing,
        )

    if u >= 1.0:
        w1 = np.exp(q * log_p + omq * (log_c + (roots.s1 - 1.0) * log_d))
        w2 = np.exp(q * log_p + omq * (log_d + (roots.s2 - 1.0) * log_c))
        frac1 = math.fsum(w1 * (log_c - log_d)) / math.fsum(w1 * log_c)
        frac2 = math.fsum(w2 * (log_d - log_c)) / math.fsum(w2 * log_d)
        if not (frac1 < 1.0 and frac2 < 1.0):
            raise AssertionError("mid-regime fractions must be < 1")
        u1 = roots.s1 + _clamp_pos((2.0 - roots.s1) * frac1)
        u2 = roots.s2 + _clamp_pos((2.0 - roots.s2) * frac2)
        return UpperBoundBundle(
            u=u, case="a", upper=min(u1, u2), u1=u1, u2=u2,
            a=a_ing, b=b_ing, c_ing=c_ing, d_ing=d_ing,
        )

    v1 = roots.t1 + _clamp_pos(
        roots.t1 * math.fsum(w_t1 * (log_c - log_d)) / math.fsum(w_t1 * log_d)
    )
    v2 = roots.t2 + _clamp_pos(
        roots.t2 * math.fsum(w_t2 * (log_d - log_c)) / math.fsum(w_t2 * log_c)
    )
    if min(v1, v2) <= 1.0:
        return UpperBoundBundle(
            u=u, case="b(i)", upper=min(v1, v2), v1=v1, v2=v2,
            a=a_ing, b=b_ing, c_ing=c_ing, d_ing=d_ing,
        )
    w1_val = roots.t1 + _clamp_pos(max(a_ing, c_ing))
    w2_val = roots.t2 + _clamp_pos(max(b_ing, d_ing))
    return UpperBoundBundle(
        u=u, case="b(ii)", upper=min(w1_val, w2_val),
        v1=v1, v2=v2, w1=w1_val, w2=w2_val,
        a=a_ing, b=b_ing, c_ing=c_ing, d_ing=d_ing,
    )


def equality_conditions(
    sys: DiagonalSystem, q: float, roots: FmRoots
) -> tuple[float, float, float, float]:
    """The four one-level log sums whose sign decides d_q = u(q).

    Order: (condition at t1, at t2, at s1, at s2)."""
    log_p, log_c, log_d = _logs(sys)
    omq = 1.0 - q
    w_t1 = np.exp(q * log_p + roots.t1 * omq * log_c)
    w_t2 = np.exp(q * log_p + roots.t2 * omq * log_d)
    w_s1 = np.exp(q * log_p + omq * (log_c + (roots.s1 - 1.0) * log_d))
    w_s2 = np.exp(q * log_p + omq * (log_d + (roots.s2 - 1.0) * log_c))
    return (
        math.fsum(w_t1 * (log_c - log_d)),
        math.fsum(w_t2 * (log_d - log_c)),
        math.fsum(w_s1 * (log_c - log_d)),
        math.fsum(w_s2 * (log_d - log_c)),
    )


def corollary_equality(
    sys: DiagonalSystem,
    q: float,
    roots: FmRoots | None = None,
    u: float | None = None,
) -> float | None:
    """u(q) when one of the sign conditions certifies d_q = u(q); else None.

    Orientation-aligned systems (c_i >= d_i for all i, or c_i <= d_i for all
    i) qualify unconditionally.
    """
    _check_q(q)
    if not q > 1.0:
        raise ValueError("the equality conditions are stated for q > 1")
    if roots is None:
        roots = fm_roots(sys, q)
    if u is None:
        _, u = u_roots(sys, q)
    cs, ds = sys.cs, sys.ds
    if all(c >= d for c, d in zip(cs, ds)) or all(c <= d for c, d in zip(cs, ds)):
        return u
    cond_t1, cond_t2, cond_s1, cond_s2 = equality_conditions(sys, q, roots)
    if 1.0 < u <= 2.0:
        if abs(u - roots.s1) <= MATCH_TOL and cond_s1 >= 0.0:
            return u
        if abs(u - roots.s2) <= MATCH_TOL and cond_s2 >= 0.0:
            return u
    elif 0.0 < u <= 1.0:
        if abs(u - roots.t1) <= MATCH_TOL and cond_t1 >= 0.0:
            return u
        if abs(u - roots.t2) <= MATCH_TOL and cond_t2 >= 0.0:
            return u
    return None


def generalised_dimension(tau_or_dq: float, q: float) -> float:
    """tau(q) / (1 - q); positive dimensions correspond to negative tau for
    q > 1 and positive tau for q < 1."""
    if q == 1.0:
        raise ValueError("the normalisation is undefined at q = 1")
    return tau_or_dq / (1.0 - q)


# ---------------------------------------------------------------------------
# Upper-triangular input path
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UpperTriangularMap:
    """A planar affine map with linear part [[a, b], [0, d]].

    Only |a| and |d| enter the closed forms here; the off-diagonal entry is
    carried so genuinely diagonal systems can be recognised.
    """

    a: float
    b: float
    d: float
    tx: float = 0.0
    ty: float = 0.0

    def __post_init__(self):
        if not (0.0 < abs(self.a) < 1.0) or not (0.0 < abs(self.d) < 1.0):
            raise ValueError("diagonal entries must have magnitude in (0,1)")


def diagonal_entry_view(
    maps: Sequence[UpperTriangularMap], probabilities: Sequence[float]
) -> DiagonalSystem:
    """The diagonal system built from |a_i|, |d_i|, discarding off-diagonals.

    The envelope roots and case-split bounds are computed from diagonal
    entries, so this view feeds every closed form; outputs derived from it
    for non-diagonal input are flagged by the caller (see
    gendim_point_triangular).
    """
    return DiagonalSystem(
        maps=tuple(
            DiagonalMap(
                c=abs(m.a),
                d=abs(m.d),
                sign_c=1 if m.a > 0 else -1,
                sign_d=1 if m.d > 0 else -1,
                tx=m.tx,
                ty=m.ty,
            )
            for m in maps
        ),
        probabilities=tuple(probabilities),
    )


def gendim_point_triangular(
    maps: Sequence[UpperTriangularMap],
    probabilities: Sequence[float],
    q: float,
    ks: Sequence[int] = (),
    cap: int = DEFAULT_CLASS_CAP,
) -> tuple["GenDimPoint", str]:
    """Closed-form point for upper-triangular input, with a provenance flag.

    Returns (point, flag): flag "diagonal" when every off-diagonal entry is
    zero, else "diagonal-entry formulas".  Finite-k estimates need commuting
    singular values, so ks must be empty for genuinely triangular input.
    """
    diagonal = all(m.b == 0.0 for m in maps)
    if not diagonal and ks:
        raise ValueError(
            "finite-k estimates require a diagonal system; "
            "the type-class collapse does not apply to triangular maps"
        )
    view = diagonal_entry_view(maps, probabilities)
    point = gendim_point(view, q, ks=ks, cap=cap)
    return point, ("diagonal" if diagonal else "diagonal-entry formulas")


# ---------------------------------------------------------------------------
# Point assembly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenDimPoint:
    q: float
    t1: float
    t2: float
    s1: float
    s2: float
    u0: float
    u: float
    lower: float
    upper: float
    exact: float | None
    case: str
    dq_ks: dict[int, float] = field(default_factory=dict)
    cond1: float | None = None
    cond2: float | None = None
    bundle: UpperBoundBundle | None = None


def gendim_point(
    sys: DiagonalSystem,
    q: float,
    ks: Sequence[int] = (),
    cap: int = DEFAULT_CLASS_CAP,
) -> GenDimPoint:
    """Bounds, exact value (when certified) and finite-k estimates at one q."""
    _check_q(q)
    roots = fm_roots(sys, q)
    u0, u = u_roots(sys, q)
    dq_ks = {k: dq_finite_k(sys, k, q, cap=cap) for k in sorted(set(ks))}

    if q < 1.0:
        return GenDimPoint(
            q=q, t1=roots.t1, t2=roots.t2, s1=roots.s1, s2=roots.s2,
            u0=u0, u=u, lower=u0, upper=u0, exact=u0, case=KNOWN_QLT1,
            dq_ks=dq_ks,
        )

    cond_t1, cond_t2, cond_s1, cond_s2 = equality_conditions(sys, q, roots)
    cond1, cond2 = (cond_s1, cond_s2) if u > 1.0 else (cond_t1, cond_t2)
    exact = corollary_equality(sys, q, roots, u)
    if exact is not None:
        return GenDimPoint(
            q=q, t1=roots.t1, t2=roots.t2, s1=roots.s1, s2=roots.s2,
            u0=u0, u=u, lower=exact, upper=exact, exact=exact, case=EXACT_QGT1,
            dq_ks=dq_ks, cond1=cond1, cond2=cond2,
        )
    bundle = upper_bounds(sys, q, roots, u)
    lower = u
    pair = detect_swap_family(sys)
    if pair is not None:
        lower = max(lower, miao_counterexample_lower(pair[0], pair[1], q).value)
    return GenDimPoint(
        q=q, t1=roots.t1, t2=roots.t2, s1=roots.s1, s2=roots.s2,
        u0=u0, u=u, lower=lower, upper=bundle.upper, exact=None, case=BOUNDS_QGT1,
        dq_ks=dq_ks, cond1=cond1, cond2=cond2, bundle=bundle,
    )
