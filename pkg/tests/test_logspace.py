import math

import numpy as np
import pytest

from affine_spectra.logspace import NEG_INF, LogValue, log_mean_weighted, logsumexp


def test_zero_coupling():
    z = LogValue.zero()
    assert z.sign == 0 and z.log_abs == NEG_INF
    assert z.to_float() == 0.0
    with pytest.raises(ValueError):
        LogValue(0, 1.0)
    with pytest.raises(ValueError):
        LogValue(1, NEG_INF)
    with pytest.raises(ValueError):
        LogValue(2, 0.0)


def test_roundtrip():
    for x in (1.0, -3.5, 1e-300, -2e222, 0.0):
        assert LogValue.from_float(x).to_float() == pytest.approx(x, rel=1e-13)


def test_self_addition_is_exact_doubling():
    # x + x must land exactly on log_abs + log(2)
    for la in (-700.0, -1.0, 0.0, 3.7, 500.0):
        v = LogValue.from_log(la)
        assert (v + v).log_abs == la + math.log(2.0)
        assert (v + v).sign == 1


def test_signed_addition():
    a = LogValue.from_float(5.0)
    b = LogValue.from_float(-3.0)
    assert (a + b).to_float() == pytest.approx(2.0, rel=1e-14)
    assert (b + a).to_float() == pytest.approx(2.0, rel=1e-14)
    assert (a + (-a)).sign == 0
    assert (LogValue.zero() + b).to_float() == pytest.approx(-3.0)


def test_mul_and_pow():
    a = LogValue.from_float(2.0)
    b = LogValue.from_float(-4.0)
    assert (a * b).to_float() == pytest.approx(-8.0, rel=1e-14)
    assert a.pow(10.0).to_float() == pytest.approx(1024.0, rel=1e-12)
    with pytest.raises(ValueError):
        b.pow(0.5)


def test_logsumexp_matches_direct():
    rng = np.random.default_rng(1)
    terms = rng.uniform(-5, 5, size=40)
    direct = math.log(sum(math.exp(t) for t in terms))
    assert logsumexp(terms) == pytest.approx(direct, abs=1e-12)


def test_logsumexp_order_independent():
    rng = np.random.default_rng(2)
    terms = rng.uniform(-700, 700, size=100)
    a = logsumexp(terms)
    b = logsumexp(np.flip(terms))
    c = logsumexp(rng.permutation(terms))
    assert a == b == c


def test_logsumexp_extremes():
    assert logsumexp([]) == NEG_INF
    assert logsumexp([NEG_INF, NEG_INF]) == NEG_INF
    assert logsumexp([-1e308, 0.0]) == pytest.approx(0.0, abs=1e-15)
    # huge magnitudes never overflow
    assert logsumexp([1e6, 1e6]) == pytest.approx(1e6 + math.log(2.0))


def test_log_mean_weighted():
    lw = np.log(np.array([0.25, 0.75]))
    vals = np.array([2.0, 4.0])
    assert log_mean_weighted(lw, vals) == pytest.approx(3.5)
