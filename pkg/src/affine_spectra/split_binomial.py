"""Split binomial sums: the ratio of the upper to the lower half of the
binomial expansion of (1+x)^k and its exponential growth rate.

For x > 1 and odd k the ratio of the two halves grows like ((1+x)/(2 sqrt x))^k.
The log-space path handles k in the thousands; an exact big-integer path for
rational x serves as the oracle and verifies the proof's sandwich bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .logspace import LogValue, logsumexp

DEFAULT_EXACT_CAP = 64


def _require_odd(k: int) -> None:
    if k < 1 or k % 2 == 0:
        raise ValueError(f"k must be a positive odd integer, got {k}")


def growth_limit(x: float) -> float:
    """(1+x) / (2 sqrt x), the k-th-root limit of the split ratio.

    Exceeds 1 for every x > 1 (strict arithmetic-geometric mean gap), though
    for x within ~1e-8 of 1 the float value rounds to exactly 1.0.
    """
    if not x > 1.0:
        raise ValueError("x must exceed 1")
    limit = (1.0 + x) / (2.0 * math.sqrt(x))
    if limit < 1.0:
        raise AssertionError("limit may never fall below 1")
    return limit


@dataclass(frozen=True)
class SplitRatio:
    """Upper and lower half-sums of (1+x)^k, as logs plus an optional exact pair."""

    k: int
    x: float
    log_numerator: LogValue   # sum_{i > k/2} C(k,i) x^i
    log_denominator: LogValue  # sum_{i < k/2} C(k,i) x^i
    exact: tuple[int, int] | None = None  # (numerator, denominator) of the exact ratio

    @property
    def log_ratio(self) -> float:
        return self.log_numerator.log_abs - self.log_denominator.log_abs

    @property
    def root(self) -> float:
        """ratio^(1/k), the per-level growth factor."""
        return math.exp(self.log_ratio / self.k)


def _exact_halves(k: int, x: Fraction) -> tuple[Fraction, Fraction]:
    lower = Fraction(0)
    upper = Fraction(0)
    for i in range(k + 1):
        term = math.comb(k, i) * x ** i
        if i <= k // 2:
            lower += term
        else:
            upper += term
    return upper, lower


def split_ratio(k: int, x, exact_cap: int = DEFAULT_EXACT_CAP) -> SplitRatio:
    """Both half-sums of the binomial expansion of (1+x)^k, split at the midpoint.

    x may be a float or a Fraction; rational x with k <= exact_cap also gets
    the exact big-integer ratio.
    """
    _require_odd(k)
    exact = None
    if isinstance(x, Fraction):
        if not x > 1:
            raise ValueError("x must exceed 1")
        if k <= exact_cap:
            upper, lower = _exact_halves(k, x)
            ratio = upper / lower
            exact = (ratio.numerator, ratio.denominator)
        log_x = math.log(x.numerator) - math.log(x.denominator)
        xf = float(x)
    else:
        xf = float(x)
        if not xf > 1.0:
            raise ValueError("x must exceed 1")
        log_x = math.log(xf)

    i = np.arange(k + 1)
    log_terms = (
        np.array([math.lgamma(k + 1.0) - math.lgamma(j + 1.0) - math.lgamma(k - j + 1.0) for j in i])
        + i * log_x
    )
    half = k // 2
    log_lower = logsumexp(log_terms[: half + 1])
    log_upper = logsumexp(log_terms[half + 1:])
    return SplitRatio(
        k=k,
        x=xf,
        log_numerator=LogValue.from_log(log_upper),
        log_denominator=LogValue.from_log(log_lower),
        exact=exact,
    )


@dataclass(frozen=True)
class SandwichReport:
    """Exact-arithmetic verdicts for the two sandwich inequalities

        (1+x)^k / (2^k x^floor(k/2)) - 1  <=  R_k  <=  (k+1) (1+x)^k / (2^k x^floor(k/2)).
    """

    k: int
    x: Fraction
    ratio: Fraction
    lower_bound: Fraction
    upper_bound: Fraction
    lower_ok: bool
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


def sandwich_check(k: int, x: Fraction, exact_cap: int = DEFAULT_EXACT_CAP) -> SandwichReport:
    """Verify both sandwich inequalities in exact rational arithmetic."""
    _require_odd(k)
    if not isinstance(x, Fraction):
        x = Fraction(x)
    if not x > 1:
        raise ValueError("x must exceed 1")
    if k > exact_cap:
        raise ValueError(f"exact path capped at k <= {exact_cap}")
    upper_half, lower_half = _exact_halves(k, x)
    ratio = upper_half / lower_half
    centre = (1 + x) ** k / (2 ** k * x ** (k // 2))
    lower_bound = centre - 1
    upper_bound = (k + 1) * centre
    return SandwichReport(
        k=k, x=x, ratio=ratio,
        lower_bound=lower_bound, upper_bound=upper_bound,
        lower_ok=ratio >= lower_bound,
        upper_ok=ratio <= upper_bound,
    )


def half_sum_symmetry_exact(k: int, x: Fraction) -> bool:
    """Reindexing i -> k-i identity: the upper half-sum of (1+x)^k equals
    x^k times the lower half-sum evaluated at 1/x.  Checked exactly."""
    _require_odd(k)
    upper, _ = _exact_halves(k, x)
    _, lower_inv = _exact_halves(k, 1 / x)
    return upper == x ** k * lower_inv
