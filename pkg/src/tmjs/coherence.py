"""Phase-steerable photon statistics of the two-mode Janus state.

Expectation values follow the bilinear rule

    <O>_Psi = chi^2 <xi|O|xi> + eta^2 <zeta|O|zeta> + 2 chi eta Re[e^{-i delta} <zeta|O|xi>]

where the off-diagonal kernels are closed-form functions of the overlap
parameter ``z``. By default every moment is divided by the state norm
``N = <Psi|Psi>`` before coherences are formed; pass ``normalized=False`` to
get the raw bilinear combinations instead (``N`` does not cancel in ``g^(k)``
for ``k > 1``).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .params import (
    DegenerateSuperpositionError,
    JanusConfig,
    MeanPhotonUnderflowError,
    ZeroKernelError,
)
from .polynomials import squeezing_polynomial

NORM_EPS = 1e-14
MEAN_PHOTON_EPS = 1e-12
KINDS = ("single", "cross")


@dataclass(frozen=True)
class InterferenceKernel:
    """Complex kernel ``f = magnitude * exp(i phase)``, phase in ``(-pi, pi]``."""

    k: int
    value: complex
    kind: str

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    @property
    def phase(self) -> float:
        return wrap_phase(cmath.phase(self.value))


@dataclass(frozen=True)
class TmjsMoments:
    norm: float
    mean_photon: float
    moment_single: dict = field(default_factory=dict)
    moment_cross: dict = field(default_factory=dict)
    g_single: dict = field(default_factory=dict)
    g_cross: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CoherenceResult:
    """One evaluated observable together with the kernel that steers it."""

    observable: str
    k: int
    value: float
    source: str  # "closed-form" or "oracle"
    kernel: InterferenceKernel | None = None


def wrap_phase(phi: float) -> float:
    """Map an angle to ``(-pi, pi]``."""
    out = math.remainder(phi, 2 * math.pi)
    return math.pi if out <= -math.pi else out


def overlap_z(cfg: JanusConfig) -> complex:
    return cfg.z


def _prefactor(cfg: JanusConfig) -> float:
    return 1.0 / (math.cosh(cfg.xi.r) * math.cosh(cfg.zeta.r))


def kernel_single(cfg: JanusConfig, k: int) -> InterferenceKernel:
    """``<zeta|(a^dag)^k a^k|xi> = k!/(cosh r cosh s) * z^k/(1-z)^(k+1)``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    z = cfg.z
    value = _prefactor(cfg) * math.factorial(k) * z**k / (1 - z) ** (k + 1)
    return InterferenceKernel(k, complex(value), "overlap" if k == 0 else "single")


def kernel_cross(cfg: JanusConfig, k: int) -> InterferenceKernel:
    """``<zeta|(a^dag b^dag)^k (ab)^k|xi> = P_k(z)/(cosh r cosh s (1-z)^(2k+1))``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    z = cfg.z
    value = _prefactor(cfg) * squeezing_polynomial(k)(z) / (1 - z) ** (2 * k + 1)
    return InterferenceKernel(k, complex(value), "overlap" if k == 0 else "cross")


def _interference(cfg: JanusConfig, kernel: InterferenceKernel) -> float:
    phase = complex(math.cos(cfg.delta), -math.sin(cfg.delta))
    return 2.0 * cfg.chi * cfg.eta * (phase * kernel.value).real


def janus_norm(cfg: JanusConfig) -> float:
    """``<Psi|Psi>``; raises when the two branches cancel."""
    n = cfg.chi**2 + cfg.eta**2 + _interference(cfg, kernel_single(cfg, 0))
    if n <= NORM_EPS:
        raise DegenerateSuperpositionError(f"superposition norm {n:.3e} <= {NORM_EPS:g}")
    return n


def _diag_single(nbar: float, k: int) -> float:
    return math.factorial(k) * nbar**k


def _diag_cross(r: float, k: int) -> float:
    poly = squeezing_polynomial(k)
    x = math.tanh(r) ** 2
    return poly(x) / (1.0 - x) ** (2 * k)


def moment_single_tmjs(cfg: JanusConfig, k: int, normalized: bool = True) -> float:
    """``<(a^dag)^k a^k>`` in the Janus state."""
    if k < 0:
        raise ValueError("k must be >= 0")
    m = (
        cfg.chi**2 * _diag_single(cfg.xi.nbar, k)
        + cfg.eta**2 * _diag_single(cfg.zeta.nbar, k)
        + _interference(cfg, kernel_single(cfg, k))
    )
    return m / janus_norm(cfg) if normalized else m


def moment_cross_tmjs(cfg: JanusConfig, k: int, normalized: bool = True) -> float:
    """``<(a^dag b^dag)^k (ab)^k>`` in the Janus state."""
    if k < 0:
        raise ValueError("k must be >= 0")
    m = (
        cfg.chi**2 * _diag_cross(cfg.xi.r, k)
        + cfg.eta**2 * _diag_cross(cfg.zeta.r, k)
        + _interference(cfg, kernel_cross(cfg, k))
    )
    return m / janus_norm(cfg) if normalized else m


def mean_photon_tmjs(cfg: JanusConfig, normalized: bool = True) -> float:
    """Mean photon number, identical in modes a and b."""
    return moment_single_tmjs(cfg, 1, normalized)


def _checked_mean(cfg: JanusConfig, normalized: bool) -> float:
    n = mean_photon_tmjs(cfg, normalized)
    if n < MEAN_PHOTON_EPS:
        raise MeanPhotonUnderflowError(f"mean photon number {n:.3e} < {MEAN_PHOTON_EPS:g}")
    return n


def g_single_tmjs(cfg: JanusConfig, k: int, normalized: bool = True) -> float:
    if k < 1:
        raise ValueError("coherence order k must be >= 1")
    n = _checked_mean(cfg, normalized)
    return moment_single_tmjs(cfg, k, normalized) / n**k


def g_cross_tmjs(cfg: JanusConfig, k: int, normalized: bool = True) -> float:
    if k < 1:
        raise ValueError("coherence order k must be >= 1")
    n = _checked_mean(cfg, normalized)
    return moment_cross_tmjs(cfg, k, normalized) / n ** (2 * k)


def steering_phase(cfg: JanusConfig, k: int, kind: str = "cross") -> tuple[float, float, float]:
    """Kernel phase and the Janus phases giving maximal constructive / destructive interference.

    Returns ``(phi_k, delta_constructive, delta_destructive)``; the two delta
    values are reduced to ``[0, 2 pi)``.
    """
    if kind == "single":
        kern = kernel_single(cfg, k)
    elif kind == "cross":
        kern = kernel_cross(cfg, k)
    else:
        raise ValueError(f"kind must be 'single' or 'cross', got {kind!r}")
    if kern.magnitude == 0.0:
        raise ZeroKernelError("kernel vanishes (z = 0); the Janus phase has nothing to steer")
    phi = kern.phase
    two_pi = 2 * math.pi
    return phi, phi % two_pi, (phi + math.pi) % two_pi


def tmjs_moments(cfg: JanusConfig, k_max: int = 4, normalized: bool = True) -> TmjsMoments:
    """All moments and coherences up to ``k_max`` in one record."""
    norm = janus_norm(cfg)
    mean = mean_photon_tmjs(cfg, normalized)
    ms = {k: moment_single_tmjs(cfg, k, normalized) for k in range(k_max + 1)}
    mc = {k: moment_cross_tmjs(cfg, k, normalized) for k in range(k_max + 1)}
    gs, gc = {}, {}
    if mean >= MEAN_PHOTON_EPS:
        gs = {k: ms[k] / mean**k for k in range(1, k_max + 1)}
        gc = {k: mc[k] / mean ** (2 * k) for k in range(1, k_max + 1)}
    return TmjsMoments(norm, mean, ms, mc, gs, gc)


_OBSERVABLES = {
    "mean_photon": (lambda cfg, k, nz: mean_photon_tmjs(cfg, nz), "single"),
    "moment_single": (moment_single_tmjs, "single"),
    "moment_cross": (moment_cross_tmjs, "cross"),
    "g_single": (g_single_tmjs, "single"),
    "g_cross": (g_cross_tmjs, "cross"),
}


def evaluate(cfg: JanusConfig, observable: str, k: int = 1, normalized: bool = True) -> CoherenceResult:
    """Evaluate a named observable and attach its interference kernel."""
    try:
        fn, kind = _OBSERVABLES[observable]
    except KeyError:
        raise ValueError(f"unknown observable {observable!r}; choose from {sorted(_OBSERVABLES)}")
    if observable == "mean_photon":
        k = 1
    value = fn(cfg, k, normalized)
    kern = kernel_single(cfg, k) if kind == "single" else kernel_cross(cfg, k)
    return CoherenceResult(observable, k, float(value), "closed-form", kern)
