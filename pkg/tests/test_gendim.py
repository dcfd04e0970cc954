import math
import random
from itertools import product

import pytest

from affine_spectra import (
    DiagonalMap,
    DiagonalSystem,
    corollary_equality,
    dq_finite_k,
    fm_roots,
    gendim_point,
    generalised_dimension,
    miao_counterexample_lower,
    p0_star,
    svf,
    swap_family,
    u_roots,
    upper_bounds,
)
from affine_spectra.gendim import (
    BOUNDS_QGT1,
    EXACT_QGT1,
    KNOWN_QLT1,
    REGIME_MID,
    REGIME_SUB1,
    SvfExponent,
    equality_conditions,
)

from conftest import random_system


# ---------------------------------------------------------------------------
# singular value profile
# ---------------------------------------------------------------------------

def test_svf_equal_values_power():
    r = math.log(0.3)
    for s in (0.2, 1.0, 1.7, 2.0):
        assert svf(r, r, s).log_abs == pytest.approx(s * r, abs=1e-14)


def test_svf_branch_continuity():
    a1, a2 = math.log(0.7), math.log(0.2)
    eps = 1e-12
    assert abs(svf(a1, a2, 1.0).log_abs - svf(a1, a2, 1.0 + eps).log_abs) <= 1e-11
    assert abs(svf(a1, a2, 2.0).log_abs - svf(a1, a2, 2.0 + eps).log_abs) <= 1e-11
    assert svf(a1, a2, 1.0).log_abs == pytest.approx(a1, abs=1e-14)
    assert svf(a1, a2, 2.0).log_abs == pytest.approx(a1 + a2, abs=1e-14)


def test_svf_mid_regime_value():
    got = svf(math.log(0.75), math.log(0.25), 1.5)
    assert got.to_float() == pytest.approx(0.75 * 0.25 ** 0.5, rel=1e-12)


def test_svf_domain_errors():
    with pytest.raises(ValueError):
        svf(math.log(0.2), math.log(0.7), 1.0)
    with pytest.raises(ValueError):
        svf(-1.0, -2.0, -0.1)


def test_svf_exponent_regimes():
    assert SvfExponent.of(0.5).regime == REGIME_SUB1
    assert SvfExponent.of(1.5).regime == REGIME_MID
    with pytest.raises(ValueError):
        SvfExponent.of(2.5)


# ---------------------------------------------------------------------------
# one-level roots and envelopes
# ---------------------------------------------------------------------------

def test_fm_roots_miao_q0(miao3):
    r = fm_roots(miao3, 0.0)
    assert r.t1 == pytest.approx(1.0, abs=1e-10)  # 2/5 + 3/10 + 3/10 = 1
    assert r.t2 == pytest.approx(1.0, abs=1e-10)


def test_fm_roots_swap_symmetry(counterexample):
    for q in (0.5, 2.0, 4.0):
        r = fm_roots(counterexample, q)
        assert r.t1 == r.t2
        assert r.s1 == r.s2


def test_fm_roots_q2_back_substitution(counterexample):
    r = fm_roots(counterexample, 2.0)
    residual = 0.25 * (0.75 ** -r.t1 + 0.25 ** -r.t1) - 1.0
    assert abs(residual) <= 1e-10


def test_fm_roots_guard_band(miao3):
    with pytest.raises(ValueError):
        fm_roots(miao3, 1.0)
    with pytest.raises(ValueError):
        fm_roots(miao3, 1.0000005)


def test_p0_branch_continuity(miao3):
    for q in (0.5, 2.0):
        lo = p0_star(miao3, 1.0 - 1e-12, q)
        hi = p0_star(miao3, 1.0, q)
        assert lo == pytest.approx(hi, rel=1e-9)


def test_p0_q0_is_max_axis_sum(miao3):
    for t in (0.0, 0.5, 0.9):
        cs = sum(m.c ** t for m in miao3.maps)
        ds = sum(m.d ** t for m in miao3.maps)
        assert p0_star(miao3, t, 1e-9, "max") == pytest.approx(max(cs, ds), rel=1e-6)


def test_p0_miao_unit_value(miao3):
    # both axis sums equal 1 at t = 1, q = 0
    assert p0_star(miao3, 1.0, 0.0) == pytest.approx(1.0, abs=1e-12)


def test_p0_variant_validation(miao3):
    with pytest.raises(ValueError):
        p0_star(miao3, 0.5, 2.0, "median")
    with pytest.raises(ValueError):
        p0_star(miao3, 2.5, 2.0)


def test_u_roots_miao_q0(miao3):
    u0, u = u_roots(miao3, 0.0)
    assert u0 == pytest.approx(1.0, abs=1e-10)
    assert u == u0


def test_u_roots_ordering(miao3, counterexample):
    for sys in (miao3, counterexample):
        for q in (0.3, 0.8):
            u0, u = u_roots(sys, q)
            assert u == u0
        for q in (1.5, 2.0, 6.0):
            u0, u = u_roots(sys, q)
            assert u0 <= u + 1e-12


def test_u_roots_fallback_to_two():
    # large c_i d_i keep both increasing sums below 1 on [0, 2] for q > 1
    sys = DiagonalSystem(
        (DiagonalMap(0.9, 0.9), DiagonalMap(0.9, 0.9, tx=0.05, ty=0.05)), (0.5, 0.5)
    )
    u0, u = u_roots(sys, 1.5)
    assert u0 == 2.0 and u == 2.0


def test_u_root_solves_swap_equation(counterexample):
    for q in (1.5, 2.0, 3.0):
        _, u = u_roots(counterexample, q)
        residual = 2 ** -q * (0.75 ** (u * (1 - q)) + 0.25 ** (u * (1 - q))) - 1.0
        assert abs(residual) <= 1e-10


# ---------------------------------------------------------------------------
# finite-k estimates
# ---------------------------------------------------------------------------

def brute_dq_root(sys, k, q):
    log_cs = [math.log(m.c) for m in sys.maps]
    log_ds = [math.log(m.d) for m in sys.maps]
    log_ps = [math.log(p) for p in sys.probabilities]
    words = []
    for word in product(range(sys.n), repeat=k):
        lc = sum(log_cs[i] for i in word)
        ld = sum(log_ds[i] for i in word)
        lp = sum(log_ps[i] for i in word)
        words.append((max(lc, ld), min(lc, ld), lp))

    def f(t):
        terms = []
        for a1, a2, lp in words:
            if t <= 1.0:
                phi = t * a1
            elif t <= 2.0:
                phi = a1 + (t - 1.0) * a2
            else:
                phi = 0.5 * t * (a1 + a2)
            terms.append(q * lp + (1.0 - q) * phi)
        m = max(terms)
        return m + math.log(sum(math.exp(v - m) for v in terms))

    lo, hi = 0.0, 4.0
    flo = f(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= 1e-11:
            return mid
        if (f(mid) > 0) == (flo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_dq_self_similar_reduces_to_t1():
    rng = random.Random(77)
    sys = random_system(rng, 2, self_similar=True)
    for q in (0.5, 2.0):
        r = fm_roots(sys, q)
        for k in (1, 4, 16):
            assert dq_finite_k(sys, k, q) == pytest.approx(r.t1, abs=1e-10)


@pytest.mark.parametrize("n_maps,k", [(2, 8), (3, 6)])
def test_dq_matches_brute_force(n_maps, k):
    rng = random.Random(200 + n_maps + k)
    sys = random_system(rng, n_maps)
    for q in (0.5, 2.5):
        assert dq_finite_k(sys, k, q) == pytest.approx(brute_dq_root(sys, k, q), abs=1e-9)


def test_dq_dominates_u(miao3, counterexample):
    for sys in (miao3, counterexample):
        for q in (1.5, 2.0, 4.0):
            _, u = u_roots(sys, q)
            for k in (1, 8, 64):
                assert dq_finite_k(sys, k, q) >= u - 1e-8


def test_dq_guard_band(miao3):
    with pytest.raises(ValueError):
        dq_finite_k(miao3, 4, 1.0)


# ---------------------------------------------------------------------------
# strict-gap lower bound for the swap family
# ---------------------------------------------------------------------------

def test_miao_lower_exceeds_u():
    for (c, d, q) in [(0.75, 0.25, 1.5), (0.75, 0.25, 2.0), (0.6, 0.2, 3.0)]:
        b = miao_counterexample_lower(c, d, q)
        assert b.value > b.u
        assert 0.0 < b.delta < 1.0


def test_miao_lower_correction_vanishes_as_d_to_c():
    corrections = []
    for d in (0.3, 0.4, 0.45, 0.49):
        corrections.append(miao_counterexample_lower(0.5, d, 2.0).correction)
    assert corrections == sorted(corrections, reverse=True)
    assert corrections[-1] <= 1e-3


def test_miao_lower_preconditions():
    with pytest.raises(ValueError):
        miao_counterexample_lower(0.25, 0.75, 2.0)
    with pytest.raises(ValueError):
        miao_counterexample_lower(0.75, 0.25, 0.5)


def test_dq_finite_k_consistent_with_miao_bound(counterexample):
    b = miao_counterexample_lower(0.75, 0.25, 2.0)
    assert dq_finite_k(counterexample, 2001, 2.0) >= b.value - 0.01


# ---------------------------------------------------------------------------
# upper bounds and equality conditions
# ---------------------------------------------------------------------------

def test_upper_bounds_counterexample_below_two(counterexample):
    for q in (1.5, 2.0, 5.0):
        bundle = upper_bounds(counterexample, q)
        assert bundle.upper < 2.0
        _, u = u_roots(counterexample, q)
        assert bundle.upper >= u - 1e-9


def test_upper_bounds_case_dispatch(counterexample):
    bundle = upper_bounds(counterexample, 2.0)
    assert bundle.case in ("a", "b(i)", "b(ii)")
    if bundle.case == "a":
        assert bundle.u1 is not None and bundle.u2 is not None
    if bundle.case == "b(i)":
        assert min(bundle.v1, bundle.v2) <= 1.0
    if bundle.case == "b(ii)":
        assert bundle.w1 is not None and bundle.w2 is not None
        assert min(bundle.v1, bundle.v2) > 1.0


def test_upper_bounds_trivial_when_u_two():
    sys = DiagonalSystem(
        (DiagonalMap(0.9, 0.9), DiagonalMap(0.9, 0.9, tx=0.05, ty=0.05)), (0.5, 0.5)
    )
    bundle = upper_bounds(sys, 1.5)
    assert bundle.case == "trivial"
    assert bundle.upper == 2.0


def test_upper_bounds_swap_symmetry(miao3):
    mirrored = miao3.mirrored()
    for q in (1.5, 2.5):
        a = upper_bounds(miao3, q)
        b = upper_bounds(mirrored, q)
        ra, rb = fm_roots(miao3, q), fm_roots(mirrored, q)
        assert ra.t1 == rb.t2 and ra.t2 == rb.t1
        assert ra.s1 == rb.s2 and ra.s2 == rb.s1
        assert a.upper == b.upper
        assert a.a == b.b and a.c_ing == b.d_ing


def test_corollary_aligned_system_is_exact():
    sys = DiagonalSystem(
        (DiagonalMap(0.5, 0.2), DiagonalMap(0.45, 0.3, tx=0.5, ty=0.6)), (0.5, 0.5)
    )
    for q in (1.5, 3.0):
        _, u = u_roots(sys, q)
        assert corollary_equality(sys, q) == pytest.approx(u, abs=1e-12)


def test_corollary_miao_example(miao3):
    for q in (1.5, 2.0, 3.0, 5.0):
        r = fm_roots(miao3, q)
        _, u = u_roots(miao3, q)
        exact = corollary_equality(miao3, q, r, u)
        assert exact == pytest.approx(r.t1, abs=1e-10)
        cond_t1, _, _, _ = equality_conditions(miao3, q, r)
        assert cond_t1 >= 0.0


def test_corollary_counterexample_inapplicable(counterexample):
    for q in (1.5, 2.0, 5.0):
        assert corollary_equality(counterexample, q) is None


def test_generalised_dimension():
    assert generalised_dimension(0.0, 3.0) == 0.0
    assert generalised_dimension(1.3, 0.0) == pytest.approx(1.3)
    assert generalised_dimension(-0.8, 2.0) == pytest.approx(0.8)
    with pytest.raises(ValueError):
        generalised_dimension(1.0, 1.0)


# ---------------------------------------------------------------------------
# point assembly
# ---------------------------------------------------------------------------

def test_gendim_point_qlt1(miao3):
    pt = gendim_point(miao3, 0.5, ks=[4])
    assert pt.case == KNOWN_QLT1
    assert pt.exact == pt.u0 == pt.u
    assert pt.cond1 is None


def test_gendim_point_exact(miao3):
    pt = gendim_point(miao3, 2.0, ks=[8])
    assert pt.case == EXACT_QGT1
    assert pt.exact == pytest.approx(pt.t1, abs=1e-10)
    assert pt.cond1 >= 0.0 and pt.cond2 < 0.0


def test_gendim_point_bounds(counterexample):
    pt = gendim_point(counterexample, 2.0, ks=[16])
    assert pt.case == BOUNDS_QGT1
    assert pt.exact is None
    b = miao_counterexample_lower(0.75, 0.25, 2.0)
    assert pt.lower == pytest.approx(b.value, abs=1e-12)
    assert pt.u <= pt.lower + 1e-12
    assert pt.lower <= pt.upper + 1e-9
    assert pt.u0 <= pt.u + 1e-12
    assert all(v >= pt.u - 1e-8 for v in pt.dq_ks.values())


def test_upper_bounds_case_a_mid_regime():
    # self-affine but near-conformal maps large enough that u lands in [1, 2)
    sys = DiagonalSystem(
        (DiagonalMap(0.6, 0.55), DiagonalMap(0.55, 0.6, tx=0.4, ty=0.4)),
        (0.5, 0.5),
    )
    q = 1.5
    _, u = u_roots(sys, q)
    assert 1.0 <= u < 2.0
    bundle = upper_bounds(sys, q)
    assert bundle.case == "a"
    assert bundle.u1 is not None and bundle.u2 is not None
    assert bundle.upper == min(bundle.u1, bundle.u2) < 2.0
    assert bundle.upper >= u - 1e-9


def test_gendim_point_invariants_random():
    rng = random.Random(55)
    for _ in range(6):
        sys = random_system(rng, rng.choice([2, 3]))
        for q in (0.3, 1.5, 3.5):
            pt = gendim_point(sys, q, ks=[4])
            assert pt.lower <= pt.upper + 1e-9
            assert pt.u <= pt.lower + 1e-12
            if q < 1.0:
                assert pt.u0 == pt.u
            else:
                assert pt.u0 <= pt.u + 1e-12
            if pt.exact is not None:
                assert pt.lower - 1e-9 <= pt.exact <= pt.upper + 1e-9
            if pt.bundle is not None:
                present = [
                    v for v in (pt.bundle.u1, pt.bundle.u2, pt.bundle.v1,
                                pt.bundle.v2, pt.bundle.w1, pt.bundle.w2)
                    if v is not None
                ]
                assert all(v >= pt.u - 1e-9 for v in present)


def test_triangular_input_uses_diagonal_entries():
    from affine_spectra.gendim import (
        UpperTriangularMap,
        diagonal_entry_view,
        gendim_point_triangular,
    )

    tri = [
        UpperTriangularMap(a=0.4, b=0.2, d=0.3),
        UpperTriangularMap(a=-0.3, b=0.1, d=0.4, tx=0.5, ty=0.5),
    ]
    probs = (0.6, 0.4)
    view = diagonal_entry_view(tri, probs)
    assert view.cs == (0.4, 0.3) and view.ds == (0.3, 0.4)
    assert view.maps[1].sign_c == -1

    pt, flag = gendim_point_triangular(tri, probs, 2.0)
    assert flag == "diagonal-entry formulas"
    assert pt.u == pytest.approx(u_roots(view, 2.0)[1], abs=1e-12)

    # finite-k estimates are refused for genuinely triangular maps
    with pytest.raises(ValueError):
        gendim_point_triangular(tri, probs, 2.0, ks=[4])

    # zero off-diagonals are recognised as plain diagonal input
    diag = [UpperTriangularMap(a=0.4, b=0.0, d=0.3), UpperTriangularMap(a=0.3, b=0.0, d=0.4)]
    pt2, flag2 = gendim_point_triangular(diag, probs, 2.0, ks=[4])
    assert flag2 == "diagonal"
    assert 4 in pt2.dq_ks

    with pytest.raises(ValueError):
        UpperTriangularMap(a=1.0, b=0.0, d=0.5)
