import math

import numpy as np
import pytest
from scipy.special import eval_laguerre

from tmjs.params import DegenerateSuperpositionError, SqueezeParam
from tmjs.wigner import (
    SingleModeJanus,
    janus_fock_coefficients,
    parity_check,
    single_mode_matexp_apply,
    squeezed_vacuum_coefficients,
    wigner_from_fock,
    wigner_grid,
)

W = 1 / math.sqrt(2)


def single_branch(r, theta=0.0):
    return SingleModeJanus(SqueezeParam(r, theta), SqueezeParam(0.0), 1.0, 0.0)


@pytest.fixture(scope="module")
def antisymmetric_grid():
    return wigner_grid(SingleModeJanus.symmetric(0.8, math.pi, math.pi))


def test_vacuum():
    grid = wigner_grid(single_branch(0.0), points=51)
    assert grid.at_origin() == pytest.approx(1 / math.pi, abs=1e-15)
    assert grid.min_value >= -1e-12
    c = janus_fock_coefficients(single_branch(0.0), 10)
    assert c[0] == 1 and not np.any(c[1:])


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_fock_states_match_laguerre(n):
    c = np.zeros(n + 1, complex)
    c[n] = 1.0
    x = np.linspace(-3, 3, 13)
    p = np.linspace(-2, 2.5, 13)
    rho2 = 2 * (x**2 + p**2)
    expected = (-1) ** n * np.exp(-rho2 / 2) * eval_laguerre(n, rho2) / math.pi
    np.testing.assert_allclose(wigner_from_fock(c, x, p), expected, atol=1e-14)


def test_squeezed_vacuum_is_gaussian():
    r = 0.8
    c = squeezed_vacuum_coefficients(SqueezeParam(r), 120)
    x, p = np.meshgrid(np.linspace(-3, 3, 31), np.linspace(-3, 3, 31), indexing="ij")
    # plus-sign generator stretches x: variance e^{2r}/2
    gauss = np.exp(-(x**2) * math.exp(-2 * r) - p**2 * math.exp(2 * r)) / math.pi
    np.testing.assert_allclose(wigner_from_fock(c, x, p), gauss, atol=1e-9)


def test_single_branch_norm_at_cutoff_80():
    c = janus_fock_coefficients(single_branch(0.8), 80)
    assert abs(np.sum(np.abs(c) ** 2) - 1) < 1e-10
    assert not np.any(c[1::2])


def test_odd_cutoff_rejected():
    with pytest.raises(ValueError):
        janus_fock_coefficients(single_branch(0.8), 81)


@pytest.mark.parametrize("r, theta", [(0.3, 0.0), (0.8, 1.3), (1.1, 4.0)])
def test_sign_matches_matrix_exponential(r, theta):
    p = SqueezeParam(r, theta)
    np.testing.assert_allclose(single_mode_matexp_apply(p, 120), squeezed_vacuum_coefficients(p, 120), atol=1e-8)


@pytest.mark.parametrize("r, theta", [(0.8, 0.0), (0.5, 2.0)])
def test_single_branch_nonnegative(r, theta):
    assert wigner_grid(single_branch(r, theta)).min_value >= -1e-9


def test_antisymmetric_negativity(antisymmetric_grid):
    assert antisymmetric_grid.min_value < -1e-3
    assert np.all(np.abs(antisymmetric_grid.values) <= 1 / math.pi + 5e-3)


def test_negativity_ordering(antisymmetric_grid):
    flat = wigner_grid(SingleModeJanus.symmetric(0.8, 0.0, 0.0))
    assert flat.min_value >= -1e-6
    assert antisymmetric_grid.negative_area > flat.negative_area
    unequal = wigner_grid(SingleModeJanus.symmetric(0.8, 0.0, math.pi, chi=1.0, eta=0.5))
    assert antisymmetric_grid.negative_area > unequal.negative_area


def test_equal_branches_out_of_phase_cancel():
    with pytest.raises(DegenerateSuperpositionError):
        wigner_grid(SingleModeJanus.symmetric(0.8, 0.0, math.pi))


def test_reflection_symmetry(antisymmetric_grid):
    v = antisymmetric_grid.values
    assert np.max(np.abs(v - v[::-1, ::-1])) < 1e-10


@pytest.mark.parametrize("Delta, delta", [(math.pi, math.pi), (math.pi / 2, math.pi), (math.pi, 0.0), (0.0, 0.0)])
def test_parity_identity(Delta, delta):
    s = SingleModeJanus.symmetric(0.8, Delta, delta)
    assert abs(parity_check(s)) < 1e-6
    assert abs(math.pi * wigner_grid(s, points=3).at_origin() - 1) < 1e-5


@pytest.mark.parametrize("Delta, delta", [(math.pi, math.pi), (math.pi, 0.0), (math.pi / 2, math.pi)])
def test_normalization_on_adequate_extent(Delta, delta):
    r = 0.8
    grid = wigner_grid(SingleModeJanus.symmetric(r, Delta, delta), extent=4 + 2 * r, points=201)
    assert abs(grid.integral() - 1) < 5e-3


@pytest.mark.parametrize("points", [2, 200, 1])
def test_grid_requires_odd_points(points):
    with pytest.raises(ValueError):
        wigner_grid(single_branch(0.2), points=points)


def test_grid_contains_origin():
    grid = wigner_grid(single_branch(0.2), extent=3.3, points=11)
    assert grid.x_axis[5] == 0.0 and grid.p_axis[5] == 0.0
