"""Closed-form statistics of a single two-mode squeezed vacuum."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .params import DivergentInputError, SqueezeParam
from .polynomials import squeezing_polynomial


@dataclass(frozen=True)
class TmssStat:
    k: int
    value: float
    kind: str  # "single" or "cross"


def g_single_tmss(k: int) -> int:
    """Single-mode coherence of a TMSS marginal: exactly ``k!`` (thermal)."""
    if k < 1:
        raise ValueError("coherence order k must be >= 1")
    return math.factorial(k)


def g_cross_tmss(k: int, p: SqueezeParam) -> float:
    """Cross-mode coherence ``P_k(x) / x**(2k)`` with ``x = tanh(r)**2``.

    Evaluated as ``(k!)**2 * inner(x) / x**k`` so it stays finite up to x = 1.
    """
    if k < 1:
        raise ValueError("coherence order k must be >= 1")
    if p.r == 0:
        raise DivergentInputError("g_ab diverges at r = 0 (zero mean photon number)")
    poly = squeezing_polynomial(k)
    x = p.x
    return poly.scale * poly.inner_value(x) / x**k


def mean_photon_tmss(p: SqueezeParam) -> float:
    return math.sinh(p.r) ** 2


def tmss_stat(k: int, p: SqueezeParam, kind: str) -> TmssStat:
    if kind == "single":
        return TmssStat(k, float(g_single_tmss(k)), kind)
    if kind == "cross":
        return TmssStat(k, g_cross_tmss(k, p), kind)
    raise ValueError(f"kind must be 'single' or 'cross', got {kind!r}")
