import math

import numpy as np
import pytest

from tmjs.fock import adequate_cutoff, build_tmss_vector, factorial_moment_cross
from tmjs.params import DivergentInputError, SqueezeParam
from tmjs.polynomials import eval_Fk
from tmjs.tmss import g_cross_tmss, g_single_tmss, mean_photon_tmss, tmss_stat


@pytest.mark.parametrize("k", range(1, 7))
def test_single_mode_is_thermal(k):
    assert g_single_tmss(k) == math.factorial(k)


def test_bad_order():
    with pytest.raises(ValueError):
        g_single_tmss(0)
    with pytest.raises(ValueError):
        g_cross_tmss(0, SqueezeParam(0.3))
    with pytest.raises(ValueError):
        tmss_stat(1, SqueezeParam(0.3), "other")


def test_cross_examples():
    # mpmath: 2 + 1/sinh^2(1)
    assert g_cross_tmss(1, SqueezeParam(1.0)) == pytest.approx(2.7240616609663105, rel=1e-14)
    assert mean_photon_tmss(SqueezeParam(1.0)) == pytest.approx(1.3810978455418157, rel=1e-15)
    assert mean_photon_tmss(SqueezeParam(0.8)) == pytest.approx(0.7887322355974427, rel=1e-15)
    assert tmss_stat(2, SqueezeParam(0.4), "single").value == 2.0


def test_zero_squeeze_diverges():
    with pytest.raises(DivergentInputError):
        g_cross_tmss(1, SqueezeParam(0.0))


@pytest.mark.parametrize("k", range(1, 5))
def test_large_squeeze_limit(k):
    assert g_cross_tmss(k, SqueezeParam(20.0)) == pytest.approx(
        math.factorial(k) ** 2 * math.comb(2 * k, k), rel=1e-8)


def test_first_order_large_r_is_two():
    assert abs(g_cross_tmss(1, SqueezeParam(20.0)) - 2.0) < 1e-8


@pytest.mark.parametrize("k", range(1, 5))
def test_small_r_slope(k):
    r = np.geomspace(1e-3, 1e-2, 25)
    g = [g_cross_tmss(k, SqueezeParam(v)) for v in r]
    slope = np.polyfit(np.log(r), np.log(g), 1)[0]
    assert abs(slope + 2 * k) < 0.05


@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("r", [0.2, 0.5, 0.8, 1.2])
def test_matches_fock_oracle(k, r):
    p = SqueezeParam(r)
    v = build_tmss_vector(p, adequate_cutoff(p.x, 2 * k))
    assert g_cross_tmss(k, p) == pytest.approx(factorial_moment_cross(v, k) / p.nbar ** (2 * k), rel=1e-7)
    assert g_cross_tmss(k, p) == pytest.approx(eval_Fk(k, p.x) / p.nbar ** (2 * k), rel=1e-12)
