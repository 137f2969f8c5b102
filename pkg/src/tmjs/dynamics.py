"""SU(1,1) dynamics behind the two-mode squeezers.

* residuals of the Wei-Norman disentangling ODEs for ``exp(lambda (xi K+ - xi* K-))``;
* the sudden squeeze / dwell / unsqueeze (Ramsey) Bogoliubov sequence;
* the Schwarzian energy flux radiated by a moving mirror ``v = p(u)``;
* mapping of two mode-matched squeezing histories onto a :class:`JanusConfig`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .params import InvalidWorldlineError, JanusConfig, SqueezeParam

SCHWARZIAN_STEP = 1e-3


# --- Wei-Norman -------------------------------------------------------------

def wei_norman_solutions(p: SqueezeParam, lam):
    """Closed-form ``A, B, C`` of the disentangled ansatz ``e^{A K+} e^{B K0} e^{C K-}``."""
    lam = np.asarray(lam, dtype=float)
    t = np.tanh(p.r * lam)
    phase = cmath.exp(1j * p.theta)
    a = phase * t
    b = -2.0 * np.log(np.cosh(p.r * lam))
    c = -np.conj(phase) * t
    return a, b, c


def wei_norman_residual_components(p: SqueezeParam, lambda_grid) -> tuple[float, float, float]:
    """Max-norm residuals of ``A' = xi - A^2 xi*``, ``B' = -2 A xi*``, ``C' = -xi* e^B``.

    Derivatives are centred finite differences; only interior nodes are scored.
    """
    lam = np.asarray(lambda_grid, dtype=float)
    if lam.ndim != 1 or lam.size < 3:
        raise ValueError("need a 1-D grid with at least 3 points")
    if lam.min() < 0 or lam.max() > 1 or np.any(np.diff(lam) <= 0):
        raise ValueError("grid must be strictly increasing inside [0, 1]")
    xi = p.xi
    a, b, c = wei_norman_solutions(p, lam)
    da = np.gradient(a, lam)[1:-1]
    db = np.gradient(b, lam)[1:-1]
    dc = np.gradient(c, lam)[1:-1]
    a_i, b_i = a[1:-1], b[1:-1]
    ra = np.abs(da - xi + a_i**2 * np.conj(xi))
    rb = np.abs(db + 2.0 * a_i * np.conj(xi))
    rc = np.abs(dc + np.conj(xi) * np.exp(b_i))
    return float(ra.max()), float(rb.max()), float(rc.max())


def wei_norman_residuals(p: SqueezeParam, lambda_grid) -> float:
    return max(wei_norman_residual_components(p, lambda_grid))


def wei_norman_refinement_ratio(p: SqueezeParam, points: int = 1001) -> float:
    """Residual on a grid of ``points`` nodes over the residual with half the spacing."""
    coarse = wei_norman_residuals(p, np.linspace(0.0, 1.0, points))
    fine = wei_norman_residuals(p, np.linspace(0.0, 1.0, 2 * points - 1))
    return coarse / fine


# --- Bogoliubov maps --------------------------------------------------------

@dataclass(frozen=True)
class BogoliubovMap2:
    """SU(1,1) element ``[[alpha, beta], [conj(beta), conj(alpha)]]``."""

    alpha: complex
    beta: complex

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "BogoliubovMap2":
        return cls(complex(m[0, 0]), complex(m[0, 1]))

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.alpha, self.beta],
                         [np.conj(self.beta), np.conj(self.alpha)]], dtype=complex)

    @property
    def defect(self) -> float:
        """``|alpha|^2 - |beta|^2 - 1``; zero for a canonical map."""
        return abs(self.alpha) ** 2 - abs(self.beta) ** 2 - 1.0

    @property
    def squeeze(self) -> SqueezeParam:
        """Squeeze magnitude ``asinh|beta|`` with phase ``arg beta``."""
        return SqueezeParam(math.asinh(abs(self.beta)), cmath.phase(self.beta))

    def __matmul__(self, other: "BogoliubovMap2") -> "BogoliubovMap2":
        return BogoliubovMap2.from_matrix(self.matrix @ other.matrix)


def squeeze_map(r: float) -> BogoliubovMap2:
    """Sudden two-mode squeeze ``Q(r) = [[cosh r, sinh r], [sinh r, cosh r]]``."""
    return BogoliubovMap2(math.cosh(r), math.sinh(r))


def rotation_map(phi: float) -> BogoliubovMap2:
    """Free dwell ``R(phi) = diag(e^{-i phi}, e^{+i phi})``."""
    return BogoliubovMap2(cmath.exp(-1j * phi), 0.0)


def ramsey_sequence(r: float, phi: float) -> BogoliubovMap2:
    """``Q(-r) R(phi) Q(r)``: alpha = cosh^2 r e^{-i phi} - sinh^2 r e^{i phi},
    beta = -2i cosh r sinh r sin phi."""
    return squeeze_map(-r) @ rotation_map(phi) @ squeeze_map(r)


# --- Schmidt-mode mapping ---------------------------------------------------

@dataclass(frozen=True)
class SchmidtModePair:
    r1: float
    theta1: float
    r2: float
    theta2: float

    @classmethod
    def from_maps(cls, first: BogoliubovMap2, second: BogoliubovMap2) -> "SchmidtModePair":
        """Take each history's squeeze phase as ``arg beta`` (passive rotations ignored)."""
        a, b = first.squeeze, second.squeeze
        return cls(a.r, a.theta, b.r, b.theta)

    @property
    def x(self) -> float:
        return math.tanh(self.r1) ** 2

    @property
    def y(self) -> float:
        return math.tanh(self.r2) ** 2

    @property
    def z(self) -> complex:
        return cmath.exp(1j * (self.theta1 - self.theta2)) * math.tanh(self.r1) * math.tanh(self.r2)


def schmidt_mode_tmjs(pair: SchmidtModePair, chi: float, eta: float, delta: float) -> JanusConfig:
    """Per-mode Janus state from two mode-matched histories."""
    return JanusConfig(SqueezeParam(pair.r1, pair.theta1), SqueezeParam(pair.r2, pair.theta2),
                       chi, eta, delta)


# --- moving mirrors ---------------------------------------------------------

class MirrorTrajectory:
    """Reflector worldline ``v = p(u)`` given as a callable or as uniform samples.

    Sampled trajectories are differentiated on their own grid, so the
    evaluation point must be a grid node with two neighbours on each side.
    """

    def __init__(self, p: Callable[[float], float] | None = None, u_grid=None, samples=None):
        if (p is None) == (samples is None):
            raise ValueError("give exactly one of a callable p or sampled values")
        self._p = p
        self.u_grid = None if u_grid is None else np.asarray(u_grid, dtype=float)
        self.samples = None if samples is None else np.asarray(samples, dtype=float)
        if self.samples is not None:
            if self.u_grid is None or self.u_grid.shape != self.samples.shape:
                raise ValueError("sampled trajectories need a matching u grid")
            du = np.diff(self.u_grid)
            if du.size < 4 or np.any(du <= 0) or not np.allclose(du, du[0], rtol=1e-9, atol=0):
                raise ValueError("u grid must be uniform, increasing, with at least 5 nodes")
        if not self.is_increasing():
            raise InvalidWorldlineError("p(u) must be strictly increasing")

    @classmethod
    def from_samples(cls, u, v) -> "MirrorTrajectory":
        return cls(u_grid=u, samples=v)

    def is_increasing(self) -> bool:
        if self.samples is not None:
            return bool(np.all(np.diff(self.samples) > 0))
        if self.u_grid is None:
            return True
        vals = np.array([self._p(u) for u in self.u_grid])
        return bool(np.all(np.diff(vals) > 0))

    def stencil(self, u: float, h: float) -> tuple[np.ndarray, float]:
        """Values at ``u + j h`` for ``j = -2..2`` and the step actually used."""
        if self.samples is None:
            return np.array([self._p(u + j * h) for j in range(-2, 3)], dtype=float), h
        step = float(self.u_grid[1] - self.u_grid[0])
        i = int(round((u - self.u_grid[0]) / step))
        if not 2 <= i <= self.samples.size - 3 or abs(self.u_grid[i] - u) > 1e-9 * max(1.0, abs(u)):
            raise ValueError(f"u={u} is not an interior node of the sample grid")
        return self.samples[i - 2: i + 3], step


def derivatives(traj: MirrorTrajectory, u: float, h: float = SCHWARZIAN_STEP):
    """First three derivatives of ``p`` at ``u`` from 5-point central stencils."""
    f, h = traj.stencil(u, h)
    fm2, fm1, f0, fp1, fp2 = f
    d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
    d3 = (-fm2 + 2 * fm1 - 2 * fp1 + fp2) / (2 * h**3)
    return d1, d2, d3


def schwarzian(traj: MirrorTrajectory, u: float, h: float = SCHWARZIAN_STEP) -> float:
    """``{p, u} = p'''/p' - (3/2) (p''/p')^2``."""
    d1, d2, d3 = derivatives(traj, u, h)
    if not d1 > 0:
        raise InvalidWorldlineError(f"p'(u) = {d1:.3e} <= 0 at u = {u}")
    return d3 / d1 - 1.5 * (d2 / d1) ** 2


def schwarzian_flux(traj: MirrorTrajectory, u: float, h: float = SCHWARZIAN_STEP) -> float:
    """Outgoing energy flux ``<T_uu> = -{p, u} / (24 pi)``."""
    return -schwarzian(traj, u, h) / (24.0 * math.pi)
