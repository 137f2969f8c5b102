"""Squeeze parameters, Janus configurations and the package exception hierarchy."""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


class JanusError(ValueError):
    """Base class for every domain error raised by :mod:`tmjs`."""


class InvalidConfigError(JanusError):
    pass


class DegenerateSuperpositionError(JanusError):
    """The two branches cancel and the superposition has (numerically) zero norm."""


class MeanPhotonUnderflowError(JanusError):
    pass


class DivergentInputError(JanusError):
    """Input sits on a pole of the requested quantity (e.g. r = 0 for g_ab of a TMSS)."""


class ZeroKernelError(JanusError):
    pass


class InvalidWorldlineError(JanusError):
    pass


@dataclass(frozen=True)
class SqueezeParam:
    """Complex squeeze parameter ``xi = r exp(i theta)``.

    ``theta`` is stored reduced to ``[0, 2 pi)``.
    """

    r: float
    theta: float = 0.0

    def __post_init__(self):
        r = float(self.r)
        theta = float(self.theta)
        if not (math.isfinite(r) and math.isfinite(theta)):
            raise InvalidConfigError(f"non-finite squeeze parameter r={r}, theta={theta}")
        if r < 0:
            raise InvalidConfigError(f"squeeze magnitude must be >= 0, got {r}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "theta", theta % TWO_PI)

    @property
    def xi(self) -> complex:
        return self.r * complex(math.cos(self.theta), math.sin(self.theta))

    @property
    def alpha(self) -> complex:
        """Twin-Fock ratio ``tanh(r) exp(i theta)``."""
        t = math.tanh(self.r)
        return t * complex(math.cos(self.theta), math.sin(self.theta))

    @property
    def x(self) -> float:
        return math.tanh(self.r) ** 2

    @property
    def nbar(self) -> float:
        return math.sinh(self.r) ** 2


@dataclass(frozen=True)
class JanusConfig:
    """Superposition ``chi |xi> + eta exp(i delta) |zeta>`` of two squeezed vacua.

    Weights are non-negative magnitudes; the relative phase lives in ``delta``.
    """

    xi: SqueezeParam
    zeta: SqueezeParam
    chi: float = 1.0 / math.sqrt(2.0)
    eta: float = 1.0 / math.sqrt(2.0)
    delta: float = 0.0

    def __post_init__(self):
        chi, eta, delta = float(self.chi), float(self.eta), float(self.delta)
        if not all(math.isfinite(v) for v in (chi, eta, delta)):
            raise InvalidConfigError("non-finite weight or phase")
        if chi < 0 or eta < 0:
            raise InvalidConfigError(f"weights must be >= 0, got chi={chi}, eta={eta}")
        if chi == 0 and eta == 0:
            raise InvalidConfigError("chi and eta cannot both be zero")
        object.__setattr__(self, "chi", chi)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "delta", delta)

    @classmethod
    def symmetric(cls, r, Delta, delta, s=None, chi=1.0, eta=1.0, theta=0.0):
        """Build the ``r = s`` configuration used for landscape sweeps.

        ``Delta`` is the relative squeezing phase ``theta - phi``.
        """
        s = r if s is None else s
        return cls(SqueezeParam(r, theta + Delta), SqueezeParam(s, theta), chi, eta, delta)

    @property
    def z(self) -> complex:
        """Overlap parameter ``exp(i(theta - phi)) tanh r tanh s``."""
        dphi = self.xi.theta - self.zeta.theta
        mag = math.tanh(self.xi.r) * math.tanh(self.zeta.r)
        return mag * complex(math.cos(dphi), math.sin(dphi))

    @property
    def relative_phase(self) -> float:
        return (self.xi.theta - self.zeta.theta) % TWO_PI
