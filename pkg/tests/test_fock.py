import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings, strategies as st

from tmjs.coherence import kernel_cross, kernel_single
from tmjs.fock import (
    TwinFockVector,
    adequate_cutoff,
    build_tmjs_vector,
    build_tmss_vector,
    cross_state_moment,
    expm_apply_tridiagonal,
    factorial_moment_cross,
    factorial_moment_single,
    falling_factorial,
    inner_product,
    su11_matexp_apply,
)
from tmjs.params import InvalidConfigError, JanusConfig, SqueezeParam
from tmjs.polynomials import eval_Fk

# reference values from mpmath at 40 digits
C0_R05 = 0.8868188839700739
C1_R05 = 0.4098142216647450
TWO_SINH4_R05 = 0.14746828795566409


def test_vector_rejects_nonfinite():
    with pytest.raises(ValueError):
        TwinFockVector([1.0, float("nan")])


def test_vacuum_vector():
    v = build_tmss_vector(SqueezeParam(0.0, 1.3), 5)
    assert np.array_equal(v.amplitudes, [1, 0, 0, 0, 0, 0])
    assert v.cutoff == 5


def test_tmss_amplitudes():
    v = build_tmss_vector(SqueezeParam(0.5), 3)
    assert v.amplitudes[0].real == pytest.approx(C0_R05, rel=1e-15)
    assert v.amplitudes[1].real == pytest.approx(C1_R05, rel=1e-14)


def test_phase_only_changes_phase():
    a = build_tmss_vector(SqueezeParam(0.8, 0.0), 60)
    b = build_tmss_vector(SqueezeParam(0.8, math.pi / 2), 60)
    np.testing.assert_allclose(np.abs(a.amplitudes), np.abs(b.amplitudes), rtol=1e-14)


def test_default_cutoff_meets_tail():
    for r in (0.1, 0.8, 1.5, 2.0):
        v = build_tmss_vector(SqueezeParam(r))
        assert v.adequate
        assert 1 - 1e-14 <= v.norm2 <= 1 + 1e-14


def test_inadequate_cutoff_is_flagged():
    assert not build_tmss_vector(SqueezeParam(1.2), 20).adequate


def test_weighted_cutoff_grows():
    x = math.tanh(1.0) ** 2
    assert adequate_cutoff(x, 8) > adequate_cutoff(x)
    n = adequate_cutoff(x, 8)
    assert 8 * math.log(n + 1) + n * math.log(x) < math.log(1e-14)


def test_falling_factorial():
    n = np.arange(6)
    np.testing.assert_array_equal(falling_factorial(n, 0), np.ones(6))
    np.testing.assert_array_equal(falling_factorial(n, 3), [0, 0, 0, 6, 24, 60])
    with pytest.raises(ValueError):
        falling_factorial(n, -1)


def test_tmjs_single_branch():
    xi = SqueezeParam(0.7, 0.4)
    cfg = JanusConfig(xi, SqueezeParam(0.3), 1.0, 0.0)
    np.testing.assert_array_equal(build_tmjs_vector(cfg, 50).amplitudes, build_tmss_vector(xi, 50).amplitudes)


def test_tmjs_identical_branches():
    xi = SqueezeParam(0.6, 0.2)
    w = 1 / math.sqrt(2)
    v = build_tmjs_vector(JanusConfig(xi, xi, w, w, 0.0), 80)
    np.testing.assert_allclose(v.amplitudes, math.sqrt(2) * build_tmss_vector(xi, 80).amplitudes, rtol=1e-14)
    assert v.norm2 == pytest.approx(2.0, abs=1e-12)


def test_tmjs_norm_matches_direct_overlap_formula():
    w = 1 / math.sqrt(2)
    cfg = JanusConfig(SqueezeParam(0.6, 0.0), SqueezeParam(0.6, math.pi), w, w, math.pi)
    x = math.tanh(0.6) ** 2
    # overlap <zeta|xi> = 1/(cosh^2 r (1 + x)) = 1/cosh(2r); N = 1 - overlap for delta = pi
    expected = 1.0 - 1.0 / (math.cosh(0.6) ** 2 * (1 + x))
    assert build_tmjs_vector(cfg, 120).norm2 == pytest.approx(expected, abs=1e-12)


def test_tmjs_rejects_zero_weights():
    with pytest.raises(InvalidConfigError):
        JanusConfig(SqueezeParam(0.1), SqueezeParam(0.2), 0.0, 0.0)


def test_inner_product_basics():
    v = build_tmss_vector(SqueezeParam(0.9, 2.0))
    assert inner_product(v, v) == pytest.approx(1.0, abs=1e-14)
    e0, e1 = TwinFockVector([1.0]), TwinFockVector([0.0, 1.0])
    assert inner_product(e0, e1) == 0


def test_inner_product_matches_overlap():
    xi, zeta = SqueezeParam(0.5, math.pi / 3), SqueezeParam(0.5, 0.0)
    val = inner_product(build_tmss_vector(zeta, 200), build_tmss_vector(xi, 200))
    # mpmath: 1/(cosh^2(0.5) (1 - tanh^2(0.5) e^{i pi/3}))
    assert val == pytest.approx(0.8442664982535375 + 0.1748050823655018j, abs=1e-10)


def test_single_moments_examples():
    vac = build_tmss_vector(SqueezeParam(0.0), 4)
    assert factorial_moment_single(vac, 1) == 0
    v = build_tmss_vector(SqueezeParam(0.5), 120)
    assert factorial_moment_single(v, 2) == pytest.approx(TWO_SINH4_R05, rel=1e-8)
    assert factorial_moment_single(v, 0) == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(ValueError):
        factorial_moment_single(v, -1)


def test_cross_moments_examples():
    vac = build_tmss_vector(SqueezeParam(0.0), 4)
    for k in (1, 2, 3):
        assert factorial_moment_cross(vac, k) == 0
    v = build_tmss_vector(SqueezeParam(math.atanh(0.5)), 200)
    assert factorial_moment_cross(v, 1) == pytest.approx(0.25 * 1.25 / 0.5625, rel=1e-10)
    p = SqueezeParam(0.8)
    v = build_tmss_vector(p, adequate_cutoff(p.x, 6))
    # mpmath nsum of (1-x) sum [n^(3)]^2 x^n at x = tanh^2 0.8
    assert factorial_moment_cross(v, 3) == pytest.approx(687.8595694599237, rel=1e-8)
    with pytest.raises(ValueError):
        factorial_moment_cross(v, -2)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.01, 1.2), st.integers(0, 5))
def test_thermal_moments_property(r, k):
    p = SqueezeParam(r)
    v = build_tmss_vector(p, adequate_cutoff(p.x, 2 * k))
    assert factorial_moment_single(v, k) == pytest.approx(math.factorial(k) * p.nbar**k, rel=1e-8)
    assert factorial_moment_cross(v, k) == pytest.approx(eval_Fk(k, p.x), rel=1e-8)


def test_cross_state_moment_reductions():
    xi, zeta = SqueezeParam(0.5, 0.3), SqueezeParam(0.4, 1.9)
    u, v = build_tmss_vector(zeta, 150), build_tmss_vector(xi, 150)
    assert cross_state_moment(u, v, 0, "single") == pytest.approx(inner_product(u, v), abs=1e-15)
    assert cross_state_moment(v, v, 2, "single") == pytest.approx(factorial_moment_single(v, 2) * v.norm2, rel=1e-13)
    with pytest.raises(ValueError):
        cross_state_moment(u, v, 1, "diagonal")


@pytest.mark.parametrize("k", range(5))
def test_cross_state_moment_matches_kernels(k):
    cfg = JanusConfig(SqueezeParam(0.5, 0.0), SqueezeParam(0.5, 0.0))
    u, v = build_tmss_vector(cfg.zeta, 200), build_tmss_vector(cfg.xi, 200)
    assert cross_state_moment(u, v, k, "single") == pytest.approx(kernel_single(cfg, k).value, abs=1e-10)
    cfg = JanusConfig(SqueezeParam(0.7, math.pi / 2), SqueezeParam(0.7, 0.0))
    u, v = build_tmss_vector(cfg.zeta, 300), build_tmss_vector(cfg.xi, 300)
    assert cross_state_moment(u, v, k, "cross") == pytest.approx(kernel_cross(cfg, k).value, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.0, 1.5), st.floats(0.0, 2 * math.pi))
def test_annihilation_condition(r, theta):
    p = SqueezeParam(r, theta)
    c = build_tmss_vector(p).amplitudes
    n = np.arange(c.size - 1)
    np.testing.assert_allclose(np.sqrt(n + 1) * c[1:], p.alpha * np.sqrt(n + 1) * c[:-1], rtol=0, atol=1e-12)


def test_expm_apply_matches_scipy():
    rng = np.random.default_rng(3)
    n = 30
    lower = rng.normal(size=n - 1) + 1j * rng.normal(size=n - 1)
    upper = rng.normal(size=n - 1) + 1j * rng.normal(size=n - 1)
    diag = rng.normal(size=n) * 0.3
    dense = np.diag(diag).astype(complex) + np.diag(lower, -1) + np.diag(upper, 1)
    v = rng.normal(size=n) + 0j
    np.testing.assert_allclose(expm_apply_tridiagonal(lower, upper, v, diag), scipy.linalg.expm(dense) @ v,
                               rtol=1e-10, atol=1e-10)


@pytest.mark.parametrize("r, theta, cutoff", [(0.0, 0.0, 10), (0.5, 0.0, 80), (1.2, 2.0, 80)])
def test_su11_matexp_matches_closed_form(r, theta, cutoff):
    p = SqueezeParam(r, theta)
    a = su11_matexp_apply(p, cutoff).amplitudes
    b = build_tmss_vector(p, cutoff).amplitudes
    assert np.linalg.norm(a - b) < 1e-8
