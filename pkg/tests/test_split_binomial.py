import math
from fractions import Fraction

import pytest

from affine_spectra.split_binomial import (
    growth_limit,
    half_sum_symmetry_exact,
    sandwich_check,
    split_ratio,
)


def test_single_term_case():
    sr = split_ratio(1, 2.0)
    assert math.exp(sr.log_ratio) == pytest.approx(2.0, rel=1e-14)


def test_exact_small_cases():
    # k=3, x=2: (3*4 + 8) / (1 + 6) = 20/7
    sr = split_ratio(3, Fraction(2))
    assert sr.exact == (20, 7)
    # k=3, x=4: (3*16 + 64) / (1 + 12) = 112/13
    sr = split_ratio(3, Fraction(4))
    assert sr.exact == (112, 13)


def test_even_k_rejected():
    with pytest.raises(ValueError):
        split_ratio(4, 2.0)
    with pytest.raises(ValueError):
        sandwich_check(2, Fraction(2))


def test_x_domain():
    with pytest.raises(ValueError):
        split_ratio(3, 1.0)
    with pytest.raises(ValueError):
        growth_limit(0.9)


def test_growth_limit_values():
    assert growth_limit(4.0) == pytest.approx(1.25, rel=1e-15)
    assert growth_limit(9.0) == pytest.approx(5.0 / 3.0, rel=1e-15)
    # approaches 1 as x -> 1+ (rounds to 1.0 within float precision there)
    assert growth_limit(1.0 + 1e-8) >= 1.0
    assert growth_limit(1.0 + 1e-8) == pytest.approx(1.0, abs=1e-8)
    assert growth_limit(1.0 + 1e-4) > 1.0


@pytest.mark.parametrize("x", [Fraction(2), Fraction(7, 2)])
def test_sandwich_exact_all_odd_k(x):
    for k in range(1, 62, 2):
        rep = sandwich_check(k, x)
        assert rep.lower_ok and rep.upper_ok


def test_sandwich_k1_values():
    rep = sandwich_check(1, Fraction(2))
    assert rep.ratio == Fraction(2)
    assert rep.lower_bound == Fraction(1, 2)  # 3/2 - 1
    assert rep.upper_bound == Fraction(3)  # 2 * 3/2


@pytest.mark.parametrize("k", [1, 5, 17, 33, 63])
def test_exact_and_log_paths_agree(k):
    for x in (Fraction(2), Fraction(7, 2), Fraction(3, 2)):
        sr = split_ratio(k, x)
        num, den = sr.exact
        exact_log = math.log(num) - math.log(den)
        assert sr.log_ratio == pytest.approx(exact_log, abs=1e-10)


def test_half_sums_partition_whole_power():
    for k in (3, 9, 31):
        x = Fraction(5, 2)
        sr = split_ratio(k, x)
        total = math.log(float((1 + x) ** k))
        combined = max(sr.log_numerator.log_abs, sr.log_denominator.log_abs) + math.log1p(
            math.exp(-abs(sr.log_numerator.log_abs - sr.log_denominator.log_abs))
        )
        assert combined == pytest.approx(total, abs=1e-10)


@pytest.mark.parametrize("x", [Fraction(3, 2), Fraction(2), Fraction(4), Fraction(10)])
def test_roots_converge_to_limit(x):
    limit = growth_limit(float(x))
    dev201 = abs(split_ratio(201, x).root - limit)
    dev2001 = abs(split_ratio(2001, x).root - limit)
    assert dev2001 < dev201
    assert dev2001 <= 0.01 * limit


def test_reindexing_symmetry_exact():
    for k in range(1, 32, 2):
        assert half_sum_symmetry_exact(k, Fraction(7, 3))
        assert half_sum_symmetry_exact(k, Fraction(2))


def test_exact_halves_partition_power():
    from affine_spectra.split_binomial import _exact_halves

    for k in (1, 7, 31):
        x = Fraction(9, 4)
        upper, lower = _exact_halves(k, x)
        assert upper + lower == (1 + x) ** k
