"""Monotone scalar root finding used throughout the package.

Every implicit equation solved here has the form f(t) = 0 with f strictly
monotone and continuous, so plain bisection is exact, branch-free and easy to
reason about.  Brackets start at [-64, 64] and expand geometrically; failure
to bracket raises rather than silently clamping.
"""
from __future__ import annotations

import math
from typing import Callable


class SolverError(RuntimeError):
    """Raised when a root cannot be bracketed or the function misbehaves."""


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    max_iter: int = 400,
) -> float:
    """Root of f on [lo, hi] by bisection, to absolute tolerance tol on t.

    Requires f(lo) and f(hi) to have opposite (or zero) signs.
    """
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if math.isnan(flo) or math.isnan(fhi):
        raise SolverError("function returned NaN at bracket endpoint")
    if (flo > 0) == (fhi > 0):
        raise SolverError(f"no sign change on [{lo}, {hi}]: f={flo}, {fhi}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol:
            return mid
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return 0.5 * (lo + hi)


def solve_monotone(
    f: Callable[[float], float],
    tol: float = 1e-12,
    lo: float = -64.0,
    hi: float = 64.0,
    max_expand: int = 16,
) -> float:
    """Root of a strictly monotone f over the reals.

    The initial bracket [lo, hi] covers every system arising in practice;
    if f does not change sign there the bracket grows geometrically so a
    genuinely out-of-range root fails loudly instead of returning garbage.
    """
    flo = f(lo)
    fhi = f(hi)
    for _ in range(max_expand):
        if math.isnan(flo) or math.isnan(fhi):
            raise SolverError("function returned NaN while bracketing")
        if flo == 0.0:
            return lo
        if fhi == 0.0:
            return hi
        if (flo > 0) != (fhi > 0):
            return bisect(f, lo, hi, tol=tol)
        lo *= 2.0
        hi *= 2.0
        flo = f(lo)
        fhi = f(hi)
    raise SolverError(
        f"could not bracket a root after {max_expand} expansions (f({lo})={flo}, f({hi})={fhi})"
    )
