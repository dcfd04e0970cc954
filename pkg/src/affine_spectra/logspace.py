"""Overflow-free arithmetic on reals stored as (sign, log magnitude).

Word-level weights here are products of hundreds or thousands of factors in
(0, 1); raw floats underflow long before the quantities of interest do.  All
such products and sums are carried as logarithms, with signed values wrapped
in :class:`LogValue` and positive-array reductions done by :func:`logsumexp`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

NEG_INF = float("-inf")


@dataclass(frozen=True)
class LogValue:
    """A real number represented as sign * exp(log_abs).

    sign is -1, 0 or +1; sign == 0 if and only if log_abs == -inf.
    """

    sign: int
    log_abs: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")
        if (self.sign == 0) != (self.log_abs == NEG_INF):
            raise ValueError("sign == 0 iff log_abs == -inf")

    @staticmethod
    def zero() -> "LogValue":
        return LogValue(0, NEG_INF)

    @staticmethod
    def from_float(x: float) -> "LogValue":
        if x == 0.0:
            return LogValue.zero()
        return LogValue(1 if x > 0 else -1, math.log(abs(x)))

    @staticmethod
    def from_log(log_abs: float, sign: int = 1) -> "LogValue":
        if log_abs == NEG_INF:
            return LogValue.zero()
        return LogValue(sign, log_abs)

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_abs)

    def __mul__(self, other: "LogValue") -> "LogValue":
        if self.sign == 0 or other.sign == 0:
            return LogValue.zero()
        return LogValue(self.sign * other.sign, self.log_abs + other.log_abs)

    def pow(self, exponent: float) -> "LogValue":
        """Real power; defined for positive values only."""
        if self.sign == 0:
            if exponent <= 0:
                raise ValueError("0 cannot be raised to a non-positive power")
            return LogValue.zero()
        if self.sign < 0:
            raise ValueError("real powers of negative values are not defined here")
        return LogValue(1, exponent * self.log_abs)

    def __add__(self, other: "LogValue") -> "LogValue":
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        a, b = self, other
        if a.log_abs < b.log_abs:
            a, b = b, a
        d = b.log_abs - a.log_abs  # <= 0
        if a.sign == b.sign:
            # equal inputs give exactly log_abs + log(2): log1p(exp(0)) == log(2)
            return LogValue(a.sign, a.log_abs + math.log1p(math.exp(d)))
        if d == 0.0:
            return LogValue.zero()
        return LogValue(a.sign, a.log_abs + math.log1p(-math.exp(d)))

    def __neg__(self) -> "LogValue":
        if self.sign == 0:
            return self
        return LogValue(-self.sign, self.log_abs)


def logsumexp(log_terms) -> float:
    """log(sum(exp(t))) over an array of log magnitudes.

    The inner sum uses math.fsum, which is exactly rounded and therefore
    independent of term order: results are bit-identical no matter how the
    terms were produced or partitioned.
    """
    arr = np.asarray(log_terms, dtype=float)
    if arr.size == 0:
        return NEG_INF
    m = float(np.max(arr))
    if m == NEG_INF:
        return NEG_INF
    if math.isinf(m):
        return m
    return m + math.log(math.fsum(np.exp(arr - m)))


def log_mean_weighted(log_weights, values) -> float:
    """Sum of softmax(log_weights) * values, stable in log space.

    Used for weighted averages where the weights are tiny word measures; the
    weights need not be normalised.
    """
    lw = np.asarray(log_weights, dtype=float)
    v = np.asarray(values, dtype=float)
    m = float(np.max(lw))
    w = np.exp(lw - m)
    return math.fsum(w * v) / math.fsum(w)
