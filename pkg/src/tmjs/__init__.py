"""Photon statistics of two-mode Janus states (superpositions of two-mode squeezed vacua).

Closed-form coherences live in :mod:`tmjs.coherence`; :mod:`tmjs.fock` is the
brute-force twin-Fock engine they are checked against.
"""

__version__ = "0.1.0"

from .params import (  # noqa: E402
    DegenerateSuperpositionError,
    DivergentInputError,
    InvalidConfigError,
    InvalidWorldlineError,
    JanusConfig,
    JanusError,
    MeanPhotonUnderflowError,
    SqueezeParam,
    ZeroKernelError,
)
from .polynomials import eval_Fk, squeezing_polynomial  # noqa: E402
from .tmss import g_cross_tmss, g_single_tmss, mean_photon_tmss  # noqa: E402
from .coherence import (  # noqa: E402
    g_cross_tmjs,
    g_single_tmjs,
    janus_norm,
    kernel_cross,
    kernel_single,
    mean_photon_tmjs,
    overlap_z,
    steering_phase,
    tmjs_moments,
)

__all__ = [
    "DegenerateSuperpositionError",
    "DivergentInputError",
    "InvalidConfigError",
    "InvalidWorldlineError",
    "JanusConfig",
    "JanusError",
    "MeanPhotonUnderflowError",
    "SqueezeParam",
    "ZeroKernelError",
    "eval_Fk",
    "squeezing_polynomial",
    "g_cross_tmss",
    "g_single_tmss",
    "mean_photon_tmss",
    "g_cross_tmjs",
    "g_single_tmjs",
    "janus_norm",
    "kernel_cross",
    "kernel_single",
    "mean_photon_tmjs",
    "overlap_z",
    "steering_phase",
    "tmjs_moments",
]
