import math

import pytest

from tmjs.params import InvalidConfigError, JanusConfig, JanusError, SqueezeParam


def test_squeeze_param_properties():
    p = SqueezeParam(0.5, 2 * math.pi + 0.25)
    assert p.theta == pytest.approx(0.25)
    assert p.xi == pytest.approx(0.5 * complex(math.cos(0.25), math.sin(0.25)))
    assert p.x == pytest.approx(math.tanh(0.5) ** 2)
    assert p.nbar == pytest.approx(math.sinh(0.5) ** 2)
    assert abs(p.alpha) == pytest.approx(math.tanh(0.5))


@pytest.mark.parametrize("r, theta", [(-0.1, 0.0), (float("nan"), 0.0), (0.1, float("inf"))])
def test_squeeze_param_rejects(r, theta):
    with pytest.raises(InvalidConfigError):
        SqueezeParam(r, theta)


@pytest.mark.parametrize("chi, eta", [(0.0, 0.0), (-1.0, 1.0), (1.0, float("nan"))])
def test_config_rejects(chi, eta):
    with pytest.raises(InvalidConfigError):
        JanusConfig(SqueezeParam(0.1), SqueezeParam(0.2), chi, eta)


def test_errors_are_value_errors():
    assert issubclass(InvalidConfigError, JanusError)
    assert issubclass(JanusError, ValueError)


def test_symmetric_builder():
    cfg = JanusConfig.symmetric(0.8, math.pi, 0.3, theta=0.1)
    assert cfg.xi.r == cfg.zeta.r == 0.8
    assert cfg.relative_phase == pytest.approx(math.pi)
    assert cfg.delta == 0.3
    # mpmath: -tanh^2(0.8)
    assert cfg.z == pytest.approx(-0.44094483226775605, abs=1e-15)


def test_overlap_parameter_limits():
    assert JanusConfig(SqueezeParam(0.0), SqueezeParam(0.7, 1.0)).z == 0
    z = JanusConfig.symmetric(0.6, 0.0, 0.0).z
    assert z.imag == 0 and z.real == pytest.approx(math.tanh(0.6) ** 2)
