import math
import random

import pytest

from affine_spectra import (
    DiagonalMap,
    DiagonalSystem,
    ProjectionOverlapError,
    project,
    tau_pair,
    tau_projection,
)

from conftest import random_system


def residual(ps, q, t):
    return abs(math.fsum(g.mass ** q * g.ratio ** t for g in ps.groups) - 1.0)


def test_counterexample_projection_no_merging(counterexample):
    ps = project(counterexample, 1)
    assert ps.ratios == (0.75, 0.25)
    assert ps.masses == (0.5, 0.5)
    assert ps.merge_map == (0, 1)


def test_identical_projections_merge():
    sys = DiagonalSystem(
        (DiagonalMap(0.5, 0.3, tx=0.0), DiagonalMap(0.5, 0.4, tx=0.0, ty=0.5)),
        (0.3, 0.7),
    )
    ps = project(sys, 1)
    assert len(ps.groups) == 1
    assert ps.groups[0].mass == pytest.approx(1.0)
    assert ps.merge_map == (0, 0)


def test_miao_axis2_merging_depends_on_translations(miao3):
    # translations (0, .5, .6): all distinct vertical maps, no merging
    ps = project(miao3, 2)
    assert ps.ratios == (0.3, 0.4, 0.3)
    assert len(ps.groups) == 3
    # coinciding vertical translation and ratio does merge
    sys = miao3.with_translations([(0.0, 0.0), (0.5, 0.5), (0.0, 0.0)])
    ps2 = project(sys, 2)
    assert len(ps2.groups) == 2
    assert ps2.merge_map == (0, 1, 0)


def test_tau_at_one_is_exact_zero(counterexample):
    assert tau_projection(project(counterexample, 1), 1.0) == 0.0


def test_tau_q0_is_similarity_dimension(counterexample):
    ps = project(counterexample, 1)
    t = tau_projection(ps, 0.0)
    assert t == pytest.approx(1.0, abs=1e-11)  # 3/4 + 1/4 = 1
    assert residual(ps, 0.0, t) <= 1e-10


def test_back_substitution_over_grid(counterexample, miao3):
    for sys in (counterexample, miao3):
        for axis in (1, 2):
            ps = project(sys, axis)
            for q in (0.0, 0.3, 1.7, 4.0, 11.0):
                t = tau_projection(ps, q)
                assert residual(ps, q, t) <= 1e-10


def test_swap_symmetry(counterexample):
    for q in (0.0, 0.5, 2.0, 7.5):
        t1, t2 = tau_pair(counterexample, q)
        assert t1 == t2  # identical merged ratio/mass multisets


def test_monotone_and_convex_in_q(miao3):
    ps = project(miao3, 1)
    qs = [0.1 * i for i in range(0, 81)]
    ts = [tau_projection(ps, q) for q in qs]
    for a, b in zip(ts, ts[1:]):
        assert b <= a + 1e-10
    for a, b, c in zip(ts, ts[1:], ts[2:]):
        assert (c - b) - (b - a) >= -1e-8


def test_equal_axes_give_equal_taus():
    rng = random.Random(11)
    sys = random_system(rng, 3, self_similar=True)
    for q in (0.0, 0.5, 2.0, 5.0):
        t1, t2 = tau_pair(sys, q)
        assert abs(t1 - t2) <= 1e-10


def test_strict_mode_overlap_error():
    # distinct projected pieces with overlapping images of [0,1]
    sys = DiagonalSystem(
        (DiagonalMap(0.8, 0.3), DiagonalMap(0.5, 0.3, tx=0.1, ty=0.5)),
        (0.5, 0.5),
    )
    ps = project(sys, 1)
    with pytest.raises(ProjectionOverlapError):
        tau_projection(ps, 2.0, strict=True)
    # non-strict mode still returns the natural root
    t = tau_projection(ps, 2.0, strict=False)
    assert residual(ps, 2.0, t) <= 1e-10


def test_q_negative_rejected(counterexample):
    with pytest.raises(ValueError):
        tau_projection(project(counterexample, 1), -0.5)
