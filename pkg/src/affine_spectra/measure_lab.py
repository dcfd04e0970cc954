"""Sampling, box-counting estimation and rendering of self-affine measures.

The stationary measure is sampled by the chaos game (single orbit by
default; independent seeded sub-orbits may be merged), binned into dyadic
grids, and summarised by grid moments whose log-log slope estimates the
moment scaling exponent.  Rendering writes either a density PPM (P6) or a
rectangle SVG of a deterministic depth-k cover.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .system import DiagonalSystem

BURN_IN = 100

MODE_CHAOS = "chaos-game"
MODE_DETERMINISTIC = "deterministic-depth-k"


@dataclass(frozen=True)
class GridMeasure:
    """Dyadic-grid histogram of sampled mass at one depth.

    counts holds raw integer visits per (row, col); cells exposes the
    normalised masses.  Integer counts make merging and coarsening exact.
    """

    depth: int
    counts: dict[tuple[int, int], int]
    total_samples: int
    seed: int | None = None

    @property
    def cells(self) -> dict[tuple[int, int], float]:
        t = float(self.total_samples)
        return {rc: n / t for rc, n in self.counts.items()}

    def mass_total(self) -> float:
        t = float(self.total_samples)
        return math.fsum(n / t for n in self.counts.values())

    def moment(self, q: float) -> float:
        """Grid moment sum over occupied cells of mass^q."""
        if q == 0.0:
            return float(len(self.counts))
        t = float(self.total_samples)
        return math.fsum((n / t) ** q for n in self.counts.values())

    def aggregate(self, to_depth: int) -> "GridMeasure":
        """Coarsen to a lower depth by exact integer accumulation."""
        if to_depth > self.depth:
            raise ValueError("can only aggregate to a coarser depth")
        f = 2 ** (self.depth - to_depth)
        out: dict[tuple[int, int], int] = {}
        for (r, c), n in self.counts.items():
            key = (r // f, c // f)
            out[key] = out.get(key, 0) + n
        return GridMeasure(depth=to_depth, counts=out, total_samples=self.total_samples, seed=self.seed)


def merge(a: GridMeasure, b: GridMeasure) -> GridMeasure:
    """Merge two histograms of the same depth; order-independent on counts."""
    if a.depth != b.depth:
        raise ValueError("depths differ")
    out = dict(a.counts)
    for rc, n in b.counts.items():
        out[rc] = out.get(rc, 0) + n
    return GridMeasure(depth=a.depth, counts=out, total_samples=a.total_samples + b.total_samples, seed=None)


def _map_arrays(sys: DiagonalSystem):
    lin = np.array([[m.sign_c * m.c, m.sign_d * m.d] for m in sys.maps])
    trans = np.array([[m.tx, m.ty] for m in sys.maps])
    return lin, trans, np.array(sys.probabilities)


def sample_measure(
    sys: DiagonalSystem,
    n: int,
    seed: int,
    depth: int,
    orbits: int = 1,
    burn_in: int = BURN_IN,
) -> GridMeasure:
    """Chaos-game histogram: n binned samples at the given dyadic depth.

    The orbit stream depends only on (sys, n, seed, orbits, burn_in), never
    on depth, so binning the same stream at different depths is consistent
    under aggregation.  orbits > 1 shards the run into that many independent
    parallel orbits advanced in lockstep (each with its own burn-in).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if depth < 0 or depth > 24:
        raise ValueError("depth must lie in [0, 24]")
    size = 2 ** depth
    rng = np.random.default_rng(seed)
    lin, trans, p = _map_arrays(sys)
    n_maps = sys.n
    flat_counts = np.zeros(size * size, dtype=np.int64)

    if orbits <= 1:
        state = rng.random(2)
        chunk = 65536
        produced = 0
        # burn-in letters come from the same stream
        letters = rng.choice(n_maps, size=burn_in, p=p)
        for i in letters:
            state = lin[i] * state + trans[i]
        while produced < n:
            m = min(chunk, n - produced)
            letters = rng.choice(n_maps, size=m, p=p)
            pts = np.empty((m, 2))
            x, y = state
            for j, i in enumerate(letters):
                ax, ay = lin[i]
                tx, ty = trans[i]
                x = ax * x + tx
                y = ay * y + ty
                pts[j, 0] = x
                pts[j, 1] = y
            state = np.array([x, y])
            _bin_points(flat_counts, pts, size)
            produced += m
    else:
        states = rng.random((orbits, 2))
        for _ in range(burn_in):
            idx = rng.choice(n_maps, size=orbits, p=p)
            states = lin[idx] * states + trans[idx]
        produced = 0
        while produced < n:
            idx = rng.choice(n_maps, size=orbits, p=p)
            states = lin[idx] * states + trans[idx]
            m = min(orbits, n - produced)
            _bin_points(flat_counts, states[:m], size)
            produced += m

    occupied = np.nonzero(flat_counts)[0]
    counts = {
        (int(f // size), int(f % size)): int(flat_counts[f]) for f in occupied
    }
    return GridMeasure(depth=depth, counts=counts, total_samples=n, seed=seed)


def _bin_points(flat_counts: np.ndarray, pts: np.ndarray, size: int) -> None:
    cols = np.clip((pts[:, 0] * size).astype(np.int64), 0, size - 1)
    rows = np.clip((pts[:, 1] * size).astype(np.int64), 0, size - 1)
    flat_counts += np.bincount(rows * size + cols, minlength=size * size)


def sample_depth_range(
    sys: DiagonalSystem,
    n: int,
    seed: int,
    depths: Sequence[int],
    orbits: int = 1,
) -> list[GridMeasure]:
    """Histograms of one sample stream at several depths (finest binned once)."""
    depths = sorted(set(depths))
    finest = sample_measure(sys, n, seed, depth=depths[-1], orbits=orbits)
    return [finest.aggregate(m) if m != finest.depth else finest for m in depths]


def empirical_tau(gms: Sequence[GridMeasure], q: float) -> tuple[float, float]:
    """Box-counting estimate of the moment scaling exponent at q.

    Regresses log of the grid moment against -depth*log 2 over >= 3 depths
    and reports (-slope, standard error of the slope); the sign convention
    makes the estimate equal 2 at q = 0 for the uniform unit-square measure.
    q = 1 returns (0, 0) by convention.
    """
    if q < 0:
        raise ValueError("q must be >= 0")
    if q == 1.0:
        return 0.0, 0.0
    if len(gms) < 3:
        raise ValueError("need at least 3 depths")
    xs = np.array([-gm.depth * math.log(2.0) for gm in gms])
    ys = np.array([math.log(gm.moment(q)) for gm in gms])
    n = len(xs)
    xm, ym = xs.mean(), ys.mean()
    sxx = float(np.sum((xs - xm) ** 2))
    slope = float(np.sum((xs - xm) * (ys - ym)) / sxx)
    resid = ys - (ym + slope * (xs - xm))
    stderr = math.sqrt(float(np.sum(resid ** 2)) / (n - 2) / sxx) if n > 2 else 0.0
    return -slope, stderr


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RenderConfig:
    width: int = 800
    height: int = 800
    iterations: int = 200_000
    seed: int = 0
    mode: str = MODE_CHAOS
    depth: int = 1  # word length for the deterministic cover
    overlay: bool = False
    randomize_translations: int | None = None

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("width and height must be positive")
        if self.iterations < 0:
            raise ValueError("iterations must be >= 0")
        if self.mode not in (MODE_CHAOS, MODE_DETERMINISTIC):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")


def randomized_translations(sys: DiagonalSystem, seed: int) -> DiagonalSystem:
    """Replace translations with random ones keeping each image in the unit square."""
    rng = np.random.default_rng(seed)
    translations = []
    for m in sys.maps:
        tx = rng.uniform(0.0, 1.0 - m.c) if m.sign_c > 0 else rng.uniform(m.c, 1.0)
        ty = rng.uniform(0.0, 1.0 - m.d) if m.sign_d > 0 else rng.uniform(m.d, 1.0)
        translations.append((float(tx), float(ty)))
    return sys.with_translations(translations)


def _density_counts(sys: DiagonalSystem, cfg: RenderConfig) -> np.ndarray:
    """Pixel visit counts (height x width), row 0 at the top of the image."""
    counts = np.zeros((cfg.height, cfg.width), dtype=np.int64)
    if cfg.iterations == 0:
        return counts
    rng = np.random.default_rng(cfg.seed)
    lin, trans, p = _map_arrays(sys)
    state = rng.random(2)
    letters = rng.choice(sys.n, size=BURN_IN + cfg.iterations, p=p)
    xs = np.empty(cfg.iterations)
    ys = np.empty(cfg.iterations)
    x, y = state
    for j, i in enumerate(letters):
        ax, ay = lin[i]
        tx, ty = trans[i]
        x = ax * x + tx
        y = ay * y + ty
        if j >= BURN_IN:
            xs[j - BURN_IN] = x
            ys[j - BURN_IN] = y
    cols = np.clip((xs * cfg.width).astype(np.int64), 0, cfg.width - 1)
    rows = np.clip(((1.0 - ys) * cfg.height).astype(np.int64), 0, cfg.height - 1)
    np.add.at(counts, (rows, cols), 1)
    return counts


def level_rectangles(sys: DiagonalSystem, depth: int) -> list[tuple[float, float, float, float]]:
    """(x, y, w, h) images of the unit square under all words of length depth."""
    rects = [(0.0, 0.0, 1.0, 1.0)] if depth == 0 else []
    frontier = [((1.0, 0.0), (1.0, 0.0))]  # ((ax, bx), (ay, by)) affine 1-d parts
    for level in range(depth):
        nxt = []
        for (ax, bx), (ay, by) in frontier:
            for m in sys.maps:
                nxt.append(
                    (
                        (m.sign_c * m.c * ax, m.sign_c * m.c * bx + m.tx),
                        (m.sign_d * m.d * ay, m.sign_d * m.d * by + m.ty),
                    )
                )
        frontier = nxt
    if depth > 0:
        for (ax, bx), (ay, by) in frontier:
            x0, x1 = sorted((bx, ax + bx))
            y0, y1 = sorted((by, ay + by))
            rects.append((x0, y0, x1 - x0, y1 - y0))
    return rects


def render_ppm(sys: DiagonalSystem, cfg: RenderConfig, path) -> None:
    """Chaos-game density as an 8-bit P6 image, log-scaled grayscale on white."""
    counts = _density_counts(sys, cfg)
    cmax = counts.max()
    if cmax > 0:
        shade = (255.0 * np.log1p(counts) / math.log1p(cmax)).astype(np.uint8)
    else:
        shade = np.zeros_like(counts, dtype=np.uint8)
    gray = (255 - shade).astype(np.uint8)
    if cfg.overlay:
        _draw_rect_outlines(gray, level_rectangles(sys, 1), cfg.width, cfg.height)
    rgb = np.repeat(gray[:, :, None], 3, axis=2)
    with open(path, "wb") as fh:
        fh.write(f"P6\n{cfg.width} {cfg.height}\n255\n".encode("ascii"))
        fh.write(rgb.tobytes())


def _draw_rect_outlines(gray: np.ndarray, rects, width: int, height: int) -> None:
    for (x, y, w, h) in rects:
        c0 = int(np.clip(round(x * width), 0, width - 1))
        c1 = int(np.clip(round((x + w) * width) - 1, 0, width - 1))
        r1 = int(np.clip(round((1.0 - y) * height) - 1, 0, height - 1))
        r0 = int(np.clip(round((1.0 - y - h) * height), 0, height - 1))
        gray[r0, c0:c1 + 1] = 0
        gray[r1, c0:c1 + 1] = 0
        gray[r0:r1 + 1, c0] = 0
        gray[r0:r1 + 1, c1] = 0


def render_svg(sys: DiagonalSystem, cfg: RenderConfig, path) -> None:
    """Depth-k rectangle cover as SVG 1.1 (unit square, y flipped to screen)."""
    rects = level_rectangles(sys, cfg.depth if cfg.mode == MODE_DETERMINISTIC else 1)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{cfg.width}" height="{cfg.height}" viewBox="0 0 1 1">',
        '<rect x="0" y="0" width="1" height="1" fill="white"/>',
    ]
    for (x, y, w, h) in rects:
        lines.append(
            f'<rect x="{x:.9f}" y="{1.0 - y - h:.9f}" width="{w:.9f}" height="{h:.9f}" '
            'fill="#4878a8" fill-opacity="0.85" stroke="none"/>'
        )
    if cfg.overlay:
        for (x, y, w, h) in level_rectangles(sys, 1):
            lines.append(
                f'<rect x="{x:.9f}" y="{1.0 - y - h:.9f}" width="{w:.9f}" height="{h:.9f}" '
                'fill="none" stroke="black" stroke-width="0.002"/>'
            )
    lines.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def render(sys: DiagonalSystem, cfg: RenderConfig, path) -> None:
    """Write a PPM (chaos-game density) or SVG (rectangle cover) by extension."""
    if cfg.randomize_translations is not None:
        sys = randomized_translations(sys, cfg.randomize_translations)
    p = str(path)
    if p.endswith(".ppm"):
        render_ppm(sys, cfg, path)
    elif p.endswith(".svg"):
        render_svg(sys, cfg, path)
    else:
        raise ValueError("output path must end in .ppm or .svg")
