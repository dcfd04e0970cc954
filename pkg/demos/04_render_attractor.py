"""Rendering self-affine sets: first-level rectangle covers as SVG and
chaos-game densities as PPM, including randomised translations.

Outputs land in demos/output/.
"""
import os

import affine_spectra as a
from affine_spectra.measure_lab import MODE_CHAOS, MODE_DETERMINISTIC, RenderConfig

out_dir = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(out_dir, exist_ok=True)

print(__doc__)
sys = a.swap_family(0.75, 0.25)

cover = os.path.join(out_dir, "swap_cover_depth3.svg")
a.render(sys, RenderConfig(mode=MODE_DETERMINISTIC, depth=3, overlay=True), cover)
print("wrote", cover, "(8 rectangles, first-level outlines overlaid)")

density = os.path.join(out_dir, "swap_attractor.ppm")
a.render(sys, RenderConfig(width=512, height=512, iterations=400_000, seed=1), density)
print("wrote", density, "(chaos-game density, log grayscale)")

miao = a.DiagonalSystem(
    (
        a.DiagonalMap(0.4, 0.3),
        a.DiagonalMap(0.3, 0.4, tx=0.5, ty=0.5),
        a.DiagonalMap(0.3, 0.3, tx=0.0, ty=0.6),
    ),
    (0.8, 0.1, 0.1),
)
for seed in (1, 2, 3):
    path = os.path.join(out_dir, f"three_map_random_translations_{seed}.ppm")
    cfg = RenderConfig(
        width=384, height=384, iterations=300_000, seed=seed,
        mode=MODE_CHAOS, randomize_translations=seed,
    )
    a.render(miao, cfg, path)
    print("wrote", path, "(same matrices, independently randomised translations)")
