import random

import pytest

from affine_spectra import DiagonalMap, DiagonalSystem, swap_family


@pytest.fixture(scope="session")
def counterexample():
    """Two-map swap family with c = 3/4, d = 1/4 and uniform probabilities."""
    return swap_family(0.75, 0.25)


@pytest.fixture(scope="session")
def miao3():
    """Three-map aligned/anti-aligned mix: p = (4/5, 1/10, 1/10),
    c = (2/5, 3/10, 3/10), d = (3/10, 2/5, 3/10)."""
    return DiagonalSystem(
        maps=(
            DiagonalMap(0.4, 0.3),
            DiagonalMap(0.3, 0.4, tx=0.5, ty=0.5),
            DiagonalMap(0.3, 0.3, tx=0.0, ty=0.6),
        ),
        probabilities=(0.8, 0.1, 0.1),
    )


def random_system(rng: random.Random, n_maps: int, self_similar: bool = False) -> DiagonalSystem:
    maps = []
    for _ in range(n_maps):
        c = rng.uniform(0.1, 0.65)
        d = c if self_similar else rng.uniform(0.1, 0.65)
        maps.append(DiagonalMap(c, d, tx=rng.uniform(0, 0.4), ty=rng.uniform(0, 0.4)))
    weights = [rng.uniform(0.2, 1.0) for _ in range(n_maps)]
    total = sum(weights)
    return DiagonalSystem(tuple(maps), tuple(w / total for w in weights))
