"""Coordinate projections of a diagonal system and their moment exponents.

Projecting a planar diagonal system onto an axis yields a self-similar system
on the line; indices whose projected maps coincide exactly are merged with
summed probabilities.  The projected moment exponent tau(q) is the root of
sum_g m_g^q r_g^t = 1, exact under separation (or exact coincidence) of the
merged projected pieces.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .solvers import solve_monotone
from .system import DiagonalSystem

MERGE_TOL = 1e-12


class ProjectionOverlapError(RuntimeError):
    """Distinct projected pieces overlap, so the natural root formula is unproven."""


@dataclass(frozen=True)
class ProjectedGroup:
    ratio: float
    sign: int
    translation: float
    mass: float


@dataclass(frozen=True)
class ProjectedSystem:
    """Merged one-dimensional system: one group per distinct projected map.

    merge_map[i] is the group index of original map i.
    """

    groups: tuple[ProjectedGroup, ...]
    merge_map: tuple[int, ...]

    @property
    def ratios(self) -> tuple[float, ...]:
        return tuple(g.ratio for g in self.groups)

    @property
    def masses(self) -> tuple[float, ...]:
        return tuple(g.mass for g in self.groups)

    def has_overlap(self) -> bool:
        """Whether two distinct groups' images of [0,1] overlap as open intervals."""
        intervals = []
        for g in self.groups:
            a, b = sorted((g.translation, g.translation + g.sign * g.ratio))
            intervals.append((a, b))
        for i in range(len(intervals)):
            for j in range(i + 1, len(intervals)):
                a, b = intervals[i], intervals[j]
                if a[0] < b[1] - MERGE_TOL and b[0] < a[1] - MERGE_TOL:
                    return True
        return False


def project(sys: DiagonalSystem, axis: int) -> ProjectedSystem:
    """Project onto axis 1 (horizontal ratios c_i) or axis 2 (vertical d_i)."""
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    keys = []
    for m in sys.maps:
        if axis == 1:
            keys.append((m.c, m.sign_c, m.tx))
        else:
            keys.append((m.d, m.sign_d, m.ty))
    groups: list[list[float]] = []  # [ratio, sign, translation, mass]
    merge_map: list[int] = []
    for key, p in zip(keys, sys.probabilities):
        for gi, g in enumerate(groups):
            if (
                abs(g[0] - key[0]) <= MERGE_TOL
                and g[1] == key[1]
                and abs(g[2] - key[2]) <= MERGE_TOL
            ):
                g[3] += p
                merge_map.append(gi)
                break
        else:
            groups.append([key[0], key[1], key[2], p])
            merge_map.append(len(groups) - 1)
    return ProjectedSystem(
        groups=tuple(ProjectedGroup(g[0], int(g[1]), g[2], g[3]) for g in groups),
        merge_map=tuple(merge_map),
    )


def tau_projection(ps: ProjectedSystem, q: float, strict: bool = False) -> float:
    """The unique t with sum_g m_g^q r_g^t = 1, to absolute tolerance 1e-12.

    t(1) = 0 is returned without solving.  Exact when the merged projected
    pieces are separated or coincide; in strict mode a detected overlap of
    distinct pieces raises instead of returning the unproven natural value.
    """
    if q < 0:
        raise ValueError("q must be >= 0")
    if strict and len(ps.groups) > 1 and ps.has_overlap():
        raise ProjectionOverlapError(
            "projected images of distinct merged pieces overlap"
        )
    if q == 1.0:
        return 0.0
    log_r = [math.log(g.ratio) for g in ps.groups]
    log_m = [math.log(g.mass) for g in ps.groups]

    def f(t: float) -> float:
        # log of the defining sum; strictly decreasing in t
        terms = [q * lm + t * lr for lm, lr in zip(log_m, log_r)]
        mx = max(terms)
        return mx + math.log(math.fsum(math.exp(v - mx) for v in terms))

    return solve_monotone(f, tol=1e-12)


def tau_pair(sys: DiagonalSystem, q: float, strict: bool = False) -> tuple[float, float]:
    """(tau_1, tau_2) for the two coordinate projections."""
    return (
        tau_projection(project(sys, 1), q, strict=strict),
        tau_projection(project(sys, 2), q, strict=strict),
    )
