import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from mmohocc.specfun import erfc, igamc, normal_cdf


def test_erfc_zero():
    assert erfc(0.0) == 1.0


def test_erfc_one():
    assert erfc(1.0) == pytest.approx(0.15729920705028513, abs=1e-12)


@pytest.mark.parametrize("x", [0.1, 0.5, 2.0])
def test_erfc_reflection(x):
    assert erfc(-x) + erfc(x) == pytest.approx(2.0, abs=1e-15)


@pytest.mark.parametrize("x", np.linspace(-10, 10, 81))
def test_erfc_relative_accuracy(x):
    ref = oracles.mp_erfc(x)
    assert abs(erfc(x) - ref) <= 1e-12 * ref


def test_erfc_far_tail():
    assert erfc(30.0) == 0.0
    assert erfc(-30.0) == 2.0
    assert abs(erfc(26.0) - oracles.mp_erfc(26.0)) < 1e-300 + 1e-12 * oracles.mp_erfc(26.0)


def test_erfc_decreasing():
    v = [erfc(x) for x in np.linspace(-5, 5, 2001)]
    assert all(a > b for a, b in zip(v, v[1:]))


@given(st.floats(0.01, 1e4), )
def test_igamc_at_zero(a):
    assert igamc(a, 0.0) == 1.0


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
def test_igamc_exponential(x):
    assert igamc(1.0, x) == pytest.approx(math.exp(-x), rel=1e-12)


@pytest.mark.parametrize("x", [0.25, 1.0, 4.0])
def test_igamc_half_is_erfc_sqrt(x):
    assert igamc(0.5, x) == pytest.approx(erfc(math.sqrt(x)), rel=1e-10)


def test_igamc_half_identity_on_grid():
    for x in np.linspace(0.0, 50.0, 100):
        ref = erfc(math.sqrt(x))
        assert abs(igamc(0.5, x) - ref) <= 1e-10 * max(ref, 1e-300)


@pytest.mark.parametrize("a", [0.5, 1.5, 3.0, 4.5, 7.5, 64.0, 511.0, 1024.0])
def test_igamc_against_mpmath(a):
    for x in np.linspace(0.05, a + 8 * math.sqrt(a) + 10, 25):
        ref = oracles.mp_igamc(a, x)
        assert igamc(a, x) == pytest.approx(ref, rel=1e-10)


@pytest.mark.parametrize("a", [2.0**13, 2.0**14])
def test_igamc_large_shape(a):
    for x in (a - 200, a, a + 1.5, a + 200):
        assert igamc(a, x) == pytest.approx(oracles.mp_igamc(a, x), rel=1e-10)


def test_igamc_decreasing_in_x():
    for a in (0.5, 2.5, 100.0):
        v = [igamc(a, x) for x in np.linspace(max(0.0, a - 4 * math.sqrt(a)), a + 10 * math.sqrt(a), 400)]
        assert all(p > q for p, q in zip(v, v[1:]))


@pytest.mark.parametrize("a,x", [(0.0, 1.0), (-1.0, 1.0), (1.0, -0.5)])
def test_igamc_domain(a, x):
    with pytest.raises(ValueError):
        igamc(a, x)


def test_normal_cdf_values():
    assert normal_cdf(0.0) == 0.5
    assert normal_cdf(1.96) == pytest.approx(0.9750021048517795, abs=1e-14)
    for z in (0.5, 1.96):
        assert normal_cdf(z) + normal_cdf(-z) == pytest.approx(1.0, abs=1e-15)


@given(st.floats(-30, 30))
def test_outputs_are_probabilities(z):
    assert 0.0 <= normal_cdf(z) <= 1.0
    assert 0.0 <= igamc(2.5, abs(z)) <= 1.0


def test_normal_cdf_increasing():
    v = [normal_cdf(z) for z in np.linspace(-7, 7, 1401)]
    assert all(a < b for a, b in zip(v, v[1:]))
