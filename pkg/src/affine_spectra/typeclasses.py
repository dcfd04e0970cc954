"""Letter-count algebra for words over a map alphabet.

For commuting diagonal maps every word weight depends only on how many times
each map occurs, so sums over the N^k words of length k collapse to sums over
the C(k+N-1, N-1) integer compositions of k.  This module enumerates those
compositions with their log-multinomial weights and provides the per-class
products of log ratios that all spectral sums are built from.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .system import DiagonalSystem

DEFAULT_CLASS_CAP = 10**8


class ClassCountCapError(RuntimeError):
    """The composition count C(k+N-1, N-1) exceeds the configured cap."""


def type_class_count(n_maps: int, k: int) -> int:
    return math.comb(k + n_maps - 1, n_maps - 1)


@dataclass(frozen=True)
class TypeClass:
    """An integer composition (k_1, ..., k_N) of k with its multiplicity.

    log_multinomial is log(k! / prod k_i!), the number of words sharing these
    letter counts.
    """

    counts: tuple[int, ...]
    log_multinomial: float

    @property
    def k(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class WordStats:
    """Per-class log products: sum_i k_i log c_i, log d_i, log p_i."""

    log_c: float
    log_d: float
    log_p: float

    @property
    def log_alpha1(self) -> float:
        return max(self.log_c, self.log_d)

    @property
    def log_alpha2(self) -> float:
        return min(self.log_c, self.log_d)


def log_multinomial(counts) -> float:
    k = sum(counts)
    return math.lgamma(k + 1) - math.fsum(math.lgamma(c + 1) for c in counts)


def _compositions(n_parts: int, total: int) -> Iterator[tuple[int, ...]]:
    # lexicographic in the first coordinate: (0, ..), (1, ..), ...
    if n_parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(n_parts - 1, total - head):
            yield (head,) + tail


def enumerate_type_classes(
    n_maps: int, k: int, cap: int = DEFAULT_CLASS_CAP
) -> Iterator[TypeClass]:
    """Yield every composition of k into n_maps non-negative parts exactly once."""
    if n_maps < 1 or k < 1:
        raise ValueError("need n_maps >= 1 and k >= 1")
    count = type_class_count(n_maps, k)
    if count > cap:
        raise ClassCountCapError(
            f"{count} type classes for N={n_maps}, k={k} exceeds cap {cap}"
        )
    for counts in _compositions(n_maps, k):
        yield TypeClass(counts=counts, log_multinomial=log_multinomial(counts))


def word_stats(sys: DiagonalSystem, tc: TypeClass) -> WordStats:
    if len(tc.counts) != sys.n:
        raise ValueError(f"type class has {len(tc.counts)} parts, system has {sys.n} maps")
    log_c = math.fsum(ki * math.log(m.c) for ki, m in zip(tc.counts, sys.maps))
    log_d = math.fsum(ki * math.log(m.d) for ki, m in zip(tc.counts, sys.maps))
    log_p = math.fsum(ki * math.log(p) for ki, p in zip(tc.counts, sys.probabilities))
    return WordStats(log_c=log_c, log_d=log_d, log_p=log_p)


class TypeClassTable:
    """All type classes for (sys, k) as flat numpy arrays.

    Bisection loops evaluate pressure-like sums dozens of times per root, so
    the per-class quantities are materialised once: counts (rows), the
    log-multinomials, and the three log products.
    """

    def __init__(self, sys: DiagonalSystem, k: int, cap: int = DEFAULT_CLASS_CAP):
        n = sys.n
        count = type_class_count(n, k)
        if count > cap:
            raise ClassCountCapError(
                f"{count} type classes for N={n}, k={k} exceeds cap {cap}"
            )
        self.sys = sys
        self.k = k
        if n == 2:
            i = np.arange(k + 1, dtype=np.int64)
            counts = np.column_stack([i, k - i])
        else:
            counts = np.array(list(_compositions(n, k)), dtype=np.int64)
        self.counts = counts
        lg = np.vectorize(lambda x: math.lgamma(x + 1.0))
        self.log_mult = math.lgamma(k + 1.0) - lg(counts).sum(axis=1)
        log_cs = np.log(np.array(sys.cs))
        log_ds = np.log(np.array(sys.ds))
        log_ps = np.log(np.array(sys.probabilities))
        self.log_c = counts @ log_cs
        self.log_d = counts @ log_ds
        self.log_p = counts @ log_ps
        self.log_alpha1 = np.maximum(self.log_c, self.log_d)
        self.log_alpha2 = np.minimum(self.log_c, self.log_d)

    def __len__(self) -> int:
        return self.counts.shape[0]
