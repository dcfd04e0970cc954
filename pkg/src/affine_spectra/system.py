"""Planar diagonal iterated function systems and their validation.

A system is a list of affine maps (x, y) -> (±c x + tx, ±d y + ty) with
contraction ratios c, d in (0, 1), together with a probability vector.
Spectral quantities depend only on (c_i, d_i, p_i); signs and translations
matter for rendering and for the separation check.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

PROB_TOL = 1e-12

ROSC_HOLDS = "holds"
ROSC_FAILS = "fails-sufficient-check"
ROSC_UNKNOWN = "unknown"


class SystemDefinitionError(ValueError):
    """A system definition violates a structural invariant."""


@dataclass(frozen=True)
class DiagonalMap:
    """One affine map: linear part diag(sign_c * c, sign_d * d) plus translation."""

    c: float
    d: float
    sign_c: int = 1
    sign_d: int = 1
    tx: float = 0.0
    ty: float = 0.0

    def __post_init__(self):
        if not (0.0 < self.c < 1.0) or not (0.0 < self.d < 1.0):
            raise SystemDefinitionError(
                f"contraction ratios must lie in (0,1), got c={self.c}, d={self.d}"
            )
        if self.sign_c not in (-1, 1) or self.sign_d not in (-1, 1):
            raise SystemDefinitionError("sign flags must be -1 or +1")

    def apply(self, x: float, y: float) -> tuple[float, float]:
        return (self.sign_c * self.c * x + self.tx, self.sign_d * self.d * y + self.ty)

    def unit_square_image(self) -> tuple[tuple[float, float], tuple[float, float]]:
        """((x0, x1), (y0, y1)) bounds of the image of the open unit square."""
        xs = sorted((self.tx, self.sign_c * self.c + self.tx))
        ys = sorted((self.ty, self.sign_d * self.d + self.ty))
        return (xs[0], xs[1]), (ys[0], ys[1])


@dataclass(frozen=True)
class DiagonalSystem:
    """An ordered family of at least two diagonal maps with a probability vector.

    Probabilities must sum to 1 within 1e-12 absolute; they are renormalised
    exactly when inside that tolerance and rejected otherwise, so user errors
    surface instead of being silently scaled away.
    """

    maps: tuple[DiagonalMap, ...]
    probabilities: tuple[float, ...]

    def __post_init__(self):
        maps = tuple(self.maps)
        probs = tuple(float(p) for p in self.probabilities)
        if len(maps) < 2:
            raise SystemDefinitionError("a system needs at least two maps")
        if len(probs) != len(maps):
            raise SystemDefinitionError(
                f"{len(maps)} maps but {len(probs)} probabilities"
            )
        if any(not (0.0 < p < 1.0) for p in probs):
            raise SystemDefinitionError("each probability must lie in (0,1)")
        total = math.fsum(probs)
        if abs(total - 1.0) > PROB_TOL:
            raise SystemDefinitionError(
                f"probabilities sum to {total!r}, outside 1 +/- {PROB_TOL}"
            )
        probs = tuple(p / total for p in probs)
        object.__setattr__(self, "maps", maps)
        object.__setattr__(self, "probabilities", probs)

    @property
    def n(self) -> int:
        return len(self.maps)

    @property
    def cs(self) -> tuple[float, ...]:
        return tuple(m.c for m in self.maps)

    @property
    def ds(self) -> tuple[float, ...]:
        return tuple(m.d for m in self.maps)

    def mirrored(self) -> "DiagonalSystem":
        """The system with the two coordinate axes exchanged."""
        return DiagonalSystem(
            maps=tuple(
                DiagonalMap(m.d, m.c, m.sign_d, m.sign_c, m.ty, m.tx) for m in self.maps
            ),
            probabilities=self.probabilities,
        )

    def with_translations(self, translations: Sequence[tuple[float, float]]) -> "DiagonalSystem":
        if len(translations) != self.n:
            raise SystemDefinitionError("one translation per map required")
        return DiagonalSystem(
            maps=tuple(
                DiagonalMap(m.c, m.d, m.sign_c, m.sign_d, tx, ty)
                for m, (tx, ty) in zip(self.maps, translations)
            ),
            probabilities=self.probabilities,
        )


def swap_family(c: float, d: float) -> DiagonalSystem:
    """The two-map family diag(c,d) at the origin and diag(d,c) at (1-d, 1-c).

    Requires c > d > 0 and c + d <= 1; carries the uniform (1/2, 1/2) vector.
    """
    if not (c > d > 0.0) or c + d > 1.0:
        raise SystemDefinitionError("swap family needs c > d > 0 and c + d <= 1")
    return DiagonalSystem(
        maps=(
            DiagonalMap(c, d, 1, 1, 0.0, 0.0),
            DiagonalMap(d, c, 1, 1, 1.0 - d, 1.0 - c),
        ),
        probabilities=(0.5, 0.5),
    )


def detect_swap_family(sys: DiagonalSystem, tol: float = 1e-12) -> tuple[float, float] | None:
    """Return (c, d) with c > d if the system has the two-map swap structure.

    Structure: N = 2, probabilities (1/2, 1/2), the second map's ratios are the
    first map's exchanged, the ratios differ, and c + d <= 1.
    """
    if sys.n != 2:
        return None
    if any(abs(p - 0.5) > tol for p in sys.probabilities):
        return None
    m1, m2 = sys.maps
    if abs(m1.c - m2.d) > tol or abs(m1.d - m2.c) > tol:
        return None
    c, d = max(m1.c, m1.d), min(m1.c, m1.d)
    if c - d <= tol:
        return None
    if c + d > 1.0 + tol:
        return None
    return c, d


# ---------------------------------------------------------------------------
# Validation report
# ---------------------------------------------------------------------------

@dataclass
class ValidationReport:
    contraction_ok: bool
    probabilities_ok: bool
    rosc: str
    issues: list[str] = field(default_factory=list)
    images: list[tuple[tuple[float, float], tuple[float, float]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.contraction_ok and self.probabilities_ok


def _intervals_overlap(a: tuple[float, float], b: tuple[float, float]) -> bool:
    # open intervals: touching endpoints do not overlap
    return a[0] < b[1] and b[0] < a[1]


def validate_system(source) -> ValidationReport:
    """Check structural invariants and a sufficient separation certificate.

    Accepts a DiagonalSystem or a raw document dict (the JSON file form), so
    definitions that violate invariants can still be diagnosed.  The
    separation flag is three-valued: the unit-square check is sufficient but
    not necessary, so a failed certificate never proves separation fails.
    """
    issues: list[str] = []
    if isinstance(source, DiagonalSystem):
        maps = list(source.maps)
        probs = list(source.probabilities)
        contraction_ok = True
    else:
        doc = source
        maps = []
        contraction_ok = True
        for i, m in enumerate(doc.get("maps", [])):
            try:
                maps.append(
                    DiagonalMap(
                        c=float(m["c"]),
                        d=float(m["d"]),
                        sign_c=int(m.get("sign_c", 1)),
                        sign_d=int(m.get("sign_d", 1)),
                        tx=float(m.get("tx", 0.0)),
                        ty=float(m.get("ty", 0.0)),
                    )
                )
            except (SystemDefinitionError, KeyError, TypeError, ValueError) as exc:
                contraction_ok = False
                issues.append(f"maps[{i}]: {exc}")
        probs = [float(p) for p in doc.get("probabilities", [])]
        if len(maps) < 2:
            contraction_ok = False
            issues.append("fewer than two valid maps")

    probabilities_ok = True
    if len(probs) != len(maps):
        probabilities_ok = False
        issues.append(f"{len(maps)} maps but {len(probs)} probabilities")
    if any(not (0.0 < p < 1.0) for p in probs):
        probabilities_ok = False
        issues.append("probabilities must lie in (0,1)")
    if probs:
        total = math.fsum(probs)
        if abs(total - 1.0) > PROB_TOL:
            probabilities_ok = False
            issues.append(f"probabilities sum to {total!r}, not 1 within {PROB_TOL}")

    rosc = ROSC_UNKNOWN
    images = []
    if maps and contraction_ok:
        images = [m.unit_square_image() for m in maps]
        contained = all(
            0.0 <= xi[0] and xi[1] <= 1.0 and 0.0 <= yi[0] and yi[1] <= 1.0
            for xi, yi in images
        )
        if not contained:
            rosc = ROSC_UNKNOWN
            issues.append("some image leaves the unit square; separation certificate inapplicable")
        else:
            disjoint = True
            for i in range(len(images)):
                for j in range(i + 1, len(images)):
                    (xa, ya), (xb, yb) = images[i], images[j]
                    if _intervals_overlap(xa, xb) and _intervals_overlap(ya, yb):
                        disjoint = False
                        issues.append(f"images of maps {i} and {j} overlap")
            rosc = ROSC_HOLDS if disjoint else ROSC_FAILS

    return ValidationReport(
        contraction_ok=contraction_ok,
        probabilities_ok=probabilities_ok,
        rosc=rosc,
        issues=issues,
        images=images,
    )


# ---------------------------------------------------------------------------
# JSON system definition files
# ---------------------------------------------------------------------------
#
# Schema: {"maps": [{"c": .., "d": .., "sign_c": 1, "sign_d": 1,
#                    "tx": .., "ty": ..}, ...],
#          "probabilities": [..]}
# sign_c/sign_d/tx/ty are optional (defaults 1, 1, 0, 0).

def system_from_document(doc: dict) -> DiagonalSystem:
    if not isinstance(doc, dict):
        raise SystemDefinitionError("top-level JSON value must be an object")
    if "maps" not in doc or "probabilities" not in doc:
        raise SystemDefinitionError('document needs "maps" and "probabilities" fields')
    maps = []
    for i, m in enumerate(doc["maps"]):
        try:
            maps.append(
                DiagonalMap(
                    c=float(m["c"]),
                    d=float(m["d"]),
                    sign_c=int(m.get("sign_c", 1)),
                    sign_d=int(m.get("sign_d", 1)),
                    tx=float(m.get("tx", 0.0)),
                    ty=float(m.get("ty", 0.0)),
                )
            )
        except KeyError as exc:
            raise SystemDefinitionError(f"maps[{i}]: missing field {exc}") from exc
        except (TypeError, ValueError) as exc:
            raise SystemDefinitionError(f"maps[{i}]: {exc}") from exc
    try:
        return DiagonalSystem(maps=tuple(maps), probabilities=tuple(doc["probabilities"]))
    except (TypeError, ValueError) as exc:
        raise SystemDefinitionError(str(exc)) from exc


def system_to_document(sys: DiagonalSystem) -> dict:
    return {
        "maps": [
            {"c": m.c, "d": m.d, "sign_c": m.sign_c, "sign_d": m.sign_d, "tx": m.tx, "ty": m.ty}
            for m in sys.maps
        ],
        "probabilities": list(sys.probabilities),
    }


def load_system(path) -> DiagonalSystem:
    """Parse a system definition file; errors carry the path and line."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SystemDefinitionError(
            f"{path}:{exc.lineno}: invalid JSON: {exc.msg}"
        ) from exc
    try:
        return system_from_document(doc)
    except SystemDefinitionError as exc:
        raise SystemDefinitionError(f"{path}: {exc}") from exc
