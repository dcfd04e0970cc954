"""Moment scaling exponents of planar self-affine measures (diagonal systems).

The central object is the weighted word sum

    Psi_k(s, q) = sum over words w of length k of
                  p(w)^q * alpha1(w)^tau_w(q) * alpha2(w)^(s - tau_w(q))

where alpha1 >= alpha2 are the axis contraction products of the word and
tau_w is the moment exponent of the projection onto the word's dominant
axis.  Its root gamma_k(q) in s decreases (conditionally on
submultiplicativity of Psi_k) to the measure's moment scaling exponent
gamma(q).  This module evaluates Psi_k over type classes in log space,
solves the one-level closed forms gamma_A and gamma_B, classifies when those
closed forms are exact, and computes the strict-gap machinery for the
two-map swap family together with variational lower-bound certificates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .logspace import LogValue, logsumexp
from .projections import tau_pair
from .solvers import solve_monotone
from .system import DiagonalSystem, detect_swap_family
from .typeclasses import DEFAULT_CLASS_CAP, TypeClass, TypeClassTable, word_stats

LOG2 = math.log(2.0)

TRICHOTOMY_TOL = 1e-10
GAMMA_K_TOL = 1e-11
CLOSED_FORM_TOL = 1e-12

MAX_CASE = "MaxCase"
MIN_CASE_EXACT = "MinCaseExact"
MIN_CASE_BOUNDS_ONLY = "MinCaseBoundsOnly"
INDETERMINATE = "Indeterminate"


# ---------------------------------------------------------------------------
# Per-word weight and its type-class sums
# ---------------------------------------------------------------------------

def psi_value(
    sys: DiagonalSystem,
    tc: TypeClass,
    s: float,
    q: float,
    tau1: float,
    tau2: float,
) -> LogValue:
    """Weight of one word class (without its multiplicity), in log space.

    The projection exponent is tau1 when the horizontal contraction product
    dominates (ties included) and tau2 otherwise.
    """
    ws = word_stats(sys, tc)
    tau_i = tau1 if ws.log_c >= ws.log_d else tau2
    log_psi = q * ws.log_p + tau_i * ws.log_alpha1 + (s - tau_i) * ws.log_alpha2
    return LogValue.from_log(log_psi)


def _log_big_psi(table: TypeClassTable, s: float, q: float, tau1: float, tau2: float) -> float:
    tau_i = np.where(table.log_c >= table.log_d, tau1, tau2)
    terms = (
        table.log_mult
        + q * table.log_p
        + tau_i * table.log_alpha1
        + (s - tau_i) * table.log_alpha2
    )
    return logsumexp(terms)


def big_psi(
    sys: DiagonalSystem,
    k: int,
    s: float,
    q: float,
    tau1: float | None = None,
    tau2: float | None = None,
    cap: int = DEFAULT_CLASS_CAP,
) -> LogValue:
    """Psi_k(s, q): the full word sum of length k, collapsed over type classes."""
    if tau1 is None or tau2 is None:
        tau1, tau2 = tau_pair(sys, q)
    table = TypeClassTable(sys, k, cap=cap)
    return LogValue.from_log(_log_big_psi(table, s, q, tau1, tau2))


def gamma_k_from_table(
    table: TypeClassTable, q: float, tau1: float, tau2: float
) -> float:
    """The s with Psi_k(s, q) = 1; Psi_k is strictly decreasing in s."""
    return solve_monotone(
        lambda s: _log_big_psi(table, s, q, tau1, tau2), tol=GAMMA_K_TOL
    )


def gamma_k(
    sys: DiagonalSystem,
    k: int,
    q: float,
    tau1: float | None = None,
    tau2: float | None = None,
    cap: int = DEFAULT_CLASS_CAP,
) -> float:
    """Level-k root of Psi_k = 1, an approximation of the limit gamma(q).

    One-sided, conditional on the one-sided multiplicativity of Psi_k in k:
    for q <= 1 the word sums are submultiplicative and gamma_k is an upper
    bound decreasing to gamma(q); for q >= 1 they are supermultiplicative
    and gamma_k is a lower bound increasing to gamma(q).
    """
    if tau1 is None or tau2 is None:
        tau1, tau2 = tau_pair(sys, q)
    return gamma_k_from_table(TypeClassTable(sys, k, cap=cap), q, tau1, tau2)


# ---------------------------------------------------------------------------
# One-level closed forms and lower bounds
# ---------------------------------------------------------------------------

def gamma_closed_forms(
    sys: DiagonalSystem,
    q: float,
    tau1: float | None = None,
    tau2: float | None = None,
) -> tuple[float, float]:
    """(gamma_A, gamma_B): roots of the one-level mixed-axis sums.

    gamma_A solves sum_i p_i^q c_i^tau1 d_i^(s - tau1) = 1 and gamma_B the
    analogue with the axes exchanged; both sums are strictly decreasing in s.
    """
    if tau1 is None or tau2 is None:
        tau1, tau2 = tau_pair(sys, q)
    log_p = np.log(np.array(sys.probabilities))
    log_c = np.log(np.array(sys.cs))
    log_d = np.log(np.array(sys.ds))

    def fa(s: float) -> float:
        return logsumexp(q * log_p + tau1 * log_c + (s - tau1) * log_d)

    def fb(s: float) -> float:
        return logsumexp(q * log_p + tau2 * log_d + (s - tau2) * log_c)

    return (
        solve_monotone(fa, tol=CLOSED_FORM_TOL),
        solve_monotone(fb, tol=CLOSED_FORM_TOL),
    )


def _theta_weights_a(sys, q, tau1, gamma_a):
    log_p = np.log(np.array(sys.probabilities))
    log_c = np.log(np.array(sys.cs))
    log_d = np.log(np.array(sys.ds))
    return np.exp(q * log_p + tau1 * log_c + (gamma_a - tau1) * log_d), log_c, log_d


def _theta_weights_b(sys, q, tau2, gamma_b):
    log_p = np.log(np.array(sys.probabilities))
    log_c = np.log(np.array(sys.cs))
    log_d = np.log(np.array(sys.ds))
    return np.exp(q * log_p + tau2 * log_d + (gamma_b - tau2) * log_c), log_c, log_d


@dataclass(frozen=True)
class LowerBounds:
    """Closed-form lower bounds for gamma(q) and their internal fractions."""

    la: float
    lb: float
    fraction_a: float
    fraction_b: float
    condition_a: float  # first one-level log condition value
    condition_b: float


def lower_bounds(
    sys: DiagonalSystem,
    q: float,
    tau1: float | None = None,
    tau2: float | None = None,
    gammas: tuple[float, float] | None = None,
) -> LowerBounds:
    """L_A and L_B: the closed forms gamma_A, gamma_B minus a clamped correction.

    Each correction is (gamma - tau1 - tau2) times a fraction that is
    provably < 1, clamped at zero, so L_A <= gamma_A and L_B <= gamma_B
    always, and gamma(q) >= max(L_A, L_B) for every diagonal system.
    """
    if tau1 is None or tau2 is None:
        tau1, tau2 = tau_pair(sys, q)
    if gammas is None:
        gammas = gamma_closed_forms(sys, q, tau1, tau2)
    gamma_a, gamma_b = gammas

    w_a, log_c, log_d = _theta_weights_a(sys, q, tau1, gamma_a)
    cond_a = math.fsum(w_a * (log_c - log_d))
    frac_a = cond_a / math.fsum(w_a * log_c)
    la = gamma_a - max((gamma_a - tau1 - tau2) * frac_a, 0.0)

    w_b, log_c, log_d = _theta_weights_b(sys, q, tau2, gamma_b)
    cond_b = math.fsum(w_b * (log_d - log_c))
    frac_b = cond_b / math.fsum(w_b * log_d)
    lb = gamma_b - max((gamma_b - tau1 - tau2) * frac_b, 0.0)

    if not (frac_a < 1.0 and frac_b < 1.0):
        raise AssertionError(
            f"internal fractions must be < 1, got {frac_a}, {frac_b}"
        )
    return LowerBounds(
        la=la, lb=lb,
        fraction_a=frac_a, fraction_b=frac_b,
        condition_a=cond_a, condition_b=cond_b,
    )


# ---------------------------------------------------------------------------
# Classification of a single q
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectrumPoint:
    """Everything known about gamma(q) at one q: bounds, exact value, case."""

    q: float
    tau1: float
    tau2: float
    gamma_a: float
    gamma_b: float
    lower: float
    upper: float
    exact: float | None
    case: str
    gamma_ks: dict[int, float] = field(default_factory=dict)
    methods: dict[str, str] = field(default_factory=dict)


def classify_and_bound(
    sys: DiagonalSystem,
    q: float,
    ks: Sequence[int] = (),
    cap: int = DEFAULT_CLASS_CAP,
) -> SpectrumPoint:
    """Dispatch between the exact max case, the min case (exact under a
    one-level log condition, otherwise two-sided bounds) and a numerically
    ambiguous tie zone.

    Comparisons use a 1e-10 tolerance; in the tie zone the two branch
    conclusions pin gamma to within twice that tolerance, so the point is
    labelled Indeterminate but still carries that common value as exact.
    """
    tau1, tau2 = tau_pair(sys, q)
    gamma_a, gamma_b = gamma_closed_forms(sys, q, tau1, tau2)
    lbs = lower_bounds(sys, q, tau1, tau2, (gamma_a, gamma_b))
    gamma_ks = {
        k: gamma_k(sys, k, q, tau1, tau2, cap=cap) for k in sorted(set(ks))
    }

    t_sum = tau1 + tau2
    max_ab = max(gamma_a, gamma_b)
    min_ab = min(gamma_a, gamma_b)
    max_holds = max_ab <= t_sum + TRICHOTOMY_TOL
    min_holds = min_ab >= t_sum - TRICHOTOMY_TOL

    methods: dict[str, str] = {
        "tau1": "projection moment root",
        "tau2": "projection moment root",
        "gamma_a": "one-level closed form",
        "gamma_b": "one-level closed form",
    }

    if max_holds and not min_holds:
        exact = max_ab
        lower = upper = exact
        case = MAX_CASE
        methods["exact"] = "max(gamma_a, gamma_b), exact in the max case"
    elif min_holds and not max_holds:
        # gamma_k tightens the upper bound only on the submultiplicative side
        upper_candidates = [min_ab] + (list(gamma_ks.values()) if q <= 1.0 else [])
        lower = max(t_sum, lbs.la, lbs.lb)
        upper = min(upper_candidates)
        methods["lower"] = "max(tau1+tau2, L_A, L_B)"
        methods["upper"] = "min(gamma_a, gamma_b" + (", gamma_k)" if q <= 1.0 else ")")
        if lbs.condition_a >= 0.0 or lbs.condition_b >= 0.0:
            exact = min_ab
            case = MIN_CASE_EXACT
            methods["exact"] = "min(gamma_a, gamma_b), one-level log condition holds"
        else:
            exact = None
            case = MIN_CASE_BOUNDS_ONLY
    elif max_holds and min_holds:
        # tie zone: max_ab and min_ab agree with tau1+tau2 within tolerance,
        # so either branch pins gamma to the same value
        lower = max(t_sum, lbs.la, lbs.lb)
        upper = min([max_ab] + (list(gamma_ks.values()) if q <= 1.0 else []))
        exact = max_ab
        case = INDETERMINATE
        methods["exact"] = "tie zone; branches agree within tolerance"
    else:
        # numerically neither branch condition holds: report only what is
        # unconditional (gamma <= max closed form, gamma >= max(L_A, L_B))
        lower = max(lbs.la, lbs.lb)
        upper = min([max_ab] + (list(gamma_ks.values()) if q <= 1.0 else []))
        exact = None
        case = INDETERMINATE
        methods["note"] = "dichotomy violated numerically"

    return SpectrumPoint(
        q=q, tau1=tau1, tau2=tau2,
        gamma_a=gamma_a, gamma_b=gamma_b,
        lower=lower, upper=upper, exact=exact, case=case,
        gamma_ks=gamma_ks, methods=methods,
    )


def lower_bounds_la_lb(sys: DiagonalSystem, q: float) -> tuple[float, float]:
    lbs = lower_bounds(sys, q)
    return lbs.la, lbs.lb


# ---------------------------------------------------------------------------
# Two-map swap family: strict gap and quantitative upper bound
# ---------------------------------------------------------------------------

def swap_family_gamma_a(c: float, d: float, q: float) -> float:
    """The common closed-form value for the swap family: the s with
    2^-q (c^s + d^s) = 1."""
    log_c, log_d = math.log(c), math.log(d)

    def f(s: float) -> float:
        m = max(s * log_c, s * log_d)
        return -q * LOG2 + m + math.log(math.exp(s * log_c - m) + math.exp(s * log_d - m))

    return solve_monotone(f, tol=CLOSED_FORM_TOL)


@dataclass(frozen=True)
class SwapUpperBound:
    value: float
    delta: float
    s: float


def swap_family_upper(c: float, d: float, q: float) -> SwapUpperBound:
    """Quantitative upper bound for the swap family's moment exponent at q > 1.

    With s the common closed-form value, delta = 2 (d/c)^(s/2) / ((d/c)^s + 1)
    lies in (0, 1) and the exponent is at most s - 2 log(delta) / log(c d).
    The bound is strictly below s.
    """
    if not (c > d > 0.0) or c + d > 1.0:
        raise ValueError("swap family needs c > d > 0 and c + d <= 1")
    if not q > 1.0:
        raise ValueError("the quantitative upper bound requires q > 1")
    s = swap_family_gamma_a(c, d, q)
    log_ratio = math.log(d / c)  # < 0; s < 0 makes (d/c)^s > 1
    x = math.exp(s * log_ratio)
    delta = 2.0 * math.exp(0.5 * s * log_ratio) / (x + 1.0)
    if not (0.0 < delta < 1.0):
        raise AssertionError(f"delta must lie in (0,1), got {delta}")
    value = s - 2.0 * math.log(delta) / math.log(c * d)
    return SwapUpperBound(value=value, delta=delta, s=s)


def swap_family_upper_for_system(sys: DiagonalSystem, q: float) -> SwapUpperBound:
    pair = detect_swap_family(sys)
    if pair is None:
        raise ValueError("system does not have the two-map swap structure")
    return swap_family_upper(pair[0], pair[1], q)


def _log_binom(k: int, i: int) -> float:
    # symmetric in i <-> k-i bit-for-bit
    a, b = min(i, k - i), max(i, k - i)
    return math.lgamma(k + 1.0) - (math.lgamma(a + 1.0) + math.lgamma(b + 1.0))


def _half_sums(k: int, q: float, s: float, log_big: float, log_small: float) -> tuple[float, float]:
    """(log lower-half sum, log upper-half sum) of
    sum_i C(k,i) 2^-kq (big^(k-i) small^i)^s split at the midpoint."""
    i = np.arange(k + 1)
    lb = np.array([_log_binom(k, int(j)) for j in i])
    terms = lb - k * q * LOG2 + s * ((k - i) * log_big + i * log_small)
    half = k // 2
    return logsumexp(terms[: half + 1]), logsumexp(terms[half + 1:])


@dataclass(frozen=True)
class SplitConsistencyReport:
    """Growth check of the two half word sums for the swap family."""

    s: float
    delta: float
    ks: list[int]
    x_roots: list[float]  # X_k^(1/k)
    y_roots: list[float]
    ratio_identity_exact: bool
    deviation_at_kmax: float


def split_ratio_limit_consistency(
    c: float, d: float, q: float, k_max: int
) -> SplitConsistencyReport:
    """Check that both half-sum growth roots approach delta.

    X_k collects the word weights where the first map dominates, Y_k those
    where the second does; their k-th roots share the limit delta, and the
    two odd/even-half ratios coincide exactly by the reindexing symmetry.
    """
    if not (c > d > 0.0) or c + d > 1.0:
        raise ValueError("swap family needs c > d > 0 and c + d <= 1")
    if not q > 1.0:
        raise ValueError("the split-ratio analysis requires q > 1")
    bound = swap_family_upper(c, d, q)
    s, delta = bound.s, bound.delta
    log_c, log_d = math.log(c), math.log(d)

    ks = sorted({2 ** j - 1 for j in range(1, 40) if 2 ** j - 1 <= k_max})
    km = k_max if k_max % 2 == 1 else k_max - 1
    ks = sorted(set(ks) | {km})

    x_roots, y_roots = [], []
    identity_exact = True
    for k in ks:
        log_x, log_x_comp = _half_sums(k, q, s, log_c, log_d)
        log_y_comp, log_y = _half_sums(k, q, s, log_d, log_c)
        x_roots.append(math.exp(log_x / k))
        y_roots.append(math.exp(log_y / k))
        if (log_x - log_x_comp) != (log_y - log_y_comp):
            identity_exact = False
    dev = max(abs(x_roots[-1] - delta), abs(y_roots[-1] - delta))
    return SplitConsistencyReport(
        s=s, delta=delta, ks=ks,
        x_roots=x_roots, y_roots=y_roots,
        ratio_identity_exact=identity_exact,
        deviation_at_kmax=dev,
    )


# ---------------------------------------------------------------------------
# Variational lower-bound certificates
# ---------------------------------------------------------------------------

BRANCH_C = "c-dominant"
BRANCH_D = "d-dominant"
BRANCH_BALANCED = "balanced"

CERT_TOL = 1e-10


@dataclass(frozen=True)
class VariationalCertificate:
    """A probability vector witnessing gamma(q) >= s when valid.

    The branch is decided by which axis the theta-weighted geometric mean of
    the contractions favours; the certificate requires the entropy-like
    objective of that branch (both, when balanced) to be non-negative.
    """

    theta: tuple[float, ...]
    s: float
    objective: float
    branch: str
    valid: bool
    objective_a: float
    objective_b: float


def variational_lower_bound(
    sys: DiagonalSystem,
    q: float,
    theta: Sequence[float],
    s: float,
    tau1: float | None = None,
    tau2: float | None = None,
) -> VariationalCertificate:
    th = np.asarray(theta, dtype=float)
    if th.shape != (sys.n,):
        raise ValueError(f"theta must have {sys.n} entries")
    if np.any(th <= 0.0):
        raise ValueError("theta entries must be strictly positive")
    if abs(math.fsum(th) - 1.0) > 1e-12:
        raise ValueError("theta must sum to 1 within 1e-12")
    if tau1 is None or tau2 is None:
        tau1, tau2 = tau_pair(sys, q)

    log_p = np.log(np.array(sys.probabilities))
    log_c = np.log(np.array(sys.cs))
    log_d = np.log(np.array(sys.ds))
    log_th = np.log(th)

    mean_log_c = math.fsum(th * log_c)
    mean_log_d = math.fsum(th * log_d)
    kernel_a = q * log_p + tau1 * log_c + (s - tau1) * log_d
    kernel_b = q * log_p + tau2 * log_d + (s - tau2) * log_c
    obj_a = math.fsum(th * (kernel_a - log_th))
    obj_b = math.fsum(th * (kernel_b - log_th))

    if mean_log_c > mean_log_d + 1e-12:
        branch, objective = BRANCH_C, obj_a
    elif mean_log_d > mean_log_c + 1e-12:
        branch, objective = BRANCH_D, obj_b
    else:
        branch, objective = BRANCH_BALANCED, min(obj_a, obj_b)
    return VariationalCertificate(
        theta=tuple(float(t) for t in th),
        s=s,
        objective=objective,
        branch=branch,
        valid=objective >= -CERT_TOL,
        objective_a=obj_a,
        objective_b=obj_b,
    )


def natural_theta(sys: DiagonalSystem, q: float, tau1: float | None = None) -> tuple[float, ...]:
    """The Lagrange-suggested vector p_i^q c_i^tau1 d_i^(gamma_A - tau1)."""
    if tau1 is None:
        tau1, _ = tau_pair(sys, q)
    gamma_a, _ = gamma_closed_forms(sys, q)
    w, _, _ = _theta_weights_a(sys, q, tau1, gamma_a)
    return tuple(float(x) for x in (w / math.fsum(w)))


# ---------------------------------------------------------------------------
# Doubling sweep with (non-rigorous) extrapolation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GammaSweep:
    q: float
    ks: list[int]
    values: list[float]
    aitken: float | None  # accelerated limit estimate; not a bound


def gamma_k_sweep(
    sys: DiagonalSystem,
    q: float,
    k_cap: int = 512,
    cap: int = DEFAULT_CLASS_CAP,
) -> GammaSweep:
    """gamma_k along k = 2, 4, 8, ..., k_cap, plus an Aitken delta-squared
    estimate of the limit (reported separately; carries no rigour)."""
    tau1, tau2 = tau_pair(sys, q)
    ks, values = [], []
    k = 2
    while k <= k_cap:
        ks.append(k)
        values.append(gamma_k(sys, k, q, tau1, tau2, cap=cap))
        k *= 2
    aitken = None
    for j in range(len(values) - 2):
        x0, x1, x2 = values[j], values[j + 1], values[j + 2]
        denom = (x2 - x1) - (x1 - x0)
        if abs(denom) > 1e-15:
            aitken = x2 - (x2 - x1) ** 2 / denom
    return GammaSweep(q=q, ks=ks, values=values, aitken=aitken)
