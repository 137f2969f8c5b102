r"""Phase-space picture of the single-mode Janus state.

The single-mode analogue superposes two squeezed vacua
``S1(xi)|0>`` with ``S1(xi) = exp[(xi a^dag^2 - xi^* a^2)/2]``. Its Fock
amplitudes are

.. math::

    d_{2m} = \frac{(e^{i\theta}\tanh r)^m}{\sqrt{\cosh r}}\,\frac{\sqrt{(2m)!}}{2^m m!},

the sign being the one produced by exponentiating the generator above
(checked against :func:`single_mode_matexp_apply`).

Quadratures are ``x = (a + a^dag)/sqrt 2``, ``p = (a - a^dag)/(i sqrt 2)`` and
``W`` integrates to one, so the vacuum peaks at ``1/pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .fock import MAX_CUTOFF, EXPM_TOL, expm_apply_tridiagonal
from .params import DegenerateSuperpositionError, JanusConfig, SqueezeParam

NORM_EPS = 1e-14
# tighter than the twin-Fock default: truncation ripples in W scale with the dropped amplitude
WIGNER_TAIL_TOL = 1e-18
DEFAULT_EXTENT = 4.5
DEFAULT_POINTS = 201


class SingleModeJanus(JanusConfig):
    """``chi |xi>_1 + eta e^{i delta} |zeta>_1`` built from single-mode squeezed vacua."""


@dataclass(frozen=True, eq=False)
class WignerGrid:
    x_axis: np.ndarray
    p_axis: np.ndarray
    values: np.ndarray  # values[i, j] = W(x_axis[i], p_axis[j])

    @property
    def cell_area(self) -> float:
        return float((self.x_axis[1] - self.x_axis[0]) * (self.p_axis[1] - self.p_axis[0]))

    @property
    def min_value(self) -> float:
        return float(self.values.min())

    @property
    def negative_area(self) -> float:
        neg = self.values[self.values < 0]
        return float(-neg.sum() * self.cell_area)

    def integral(self) -> float:
        return float(self.values.sum() * self.cell_area)

    def at_origin(self) -> float:
        i = int(np.argmin(np.abs(self.x_axis)))
        j = int(np.argmin(np.abs(self.p_axis)))
        return float(self.values[i, j])


def single_mode_cutoff(x: float, tail_tol: float = WIGNER_TAIL_TOL, cap: int = MAX_CUTOFF) -> int:
    """Even cutoff ``2M`` with ``x**M < tail_tol``."""
    if x == 0.0:
        return 0
    m = math.ceil(math.log(tail_tol) / math.log(x))
    return min(2 * m, cap)


def squeezed_vacuum_coefficients(p: SqueezeParam, cutoff: int) -> np.ndarray:
    """Fock amplitudes ``0 .. cutoff`` of ``S1(xi)|0>``; odd entries are zero."""
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    out = np.zeros(cutoff + 1, dtype=complex)
    m = np.arange(cutoff // 2 + 1)
    if p.r == 0:
        out[0] = 1.0
        return out
    # sqrt((2m)!)/(2^m m!) in log form to survive large m
    log_ratio = 0.5 * gammaln(2 * m + 1) - m * math.log(2.0) - gammaln(m + 1)
    t = math.tanh(p.r)
    mag = np.exp(m * math.log(t) + log_ratio) / math.sqrt(math.cosh(p.r))
    out[0::2] = mag * np.exp(1j * p.theta * m)
    return out


def single_mode_matexp_apply(p: SqueezeParam, cutoff: int, tol: float = EXPM_TOL,
                             pad: int | None = None) -> np.ndarray:
    """``exp[(xi a^dag^2 - xi^* a^2)/2] |0>`` on the even ladder, by numerical exponentiation."""
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    m_keep = cutoff // 2
    m_size = m_keep + (max(m_keep, 32) if pad is None else pad) + 1
    m = np.arange(m_size - 1)
    ladder = np.sqrt((2 * m + 1.0) * (2 * m + 2.0))
    lower = 0.5 * p.xi * ladder
    upper = -0.5 * np.conj(p.xi) * ladder
    v = np.zeros(m_size, dtype=complex)
    v[0] = 1.0
    even = expm_apply_tridiagonal(lower, upper, v, tol=tol)
    out = np.zeros(cutoff + 1, dtype=complex)
    out[0::2] = even[: m_keep + 1]
    return out


def janus_fock_coefficients(s: JanusConfig, cutoff: int | None = None,
                            tail_tol: float = WIGNER_TAIL_TOL) -> np.ndarray:
    """Unnormalized Fock amplitudes of the single-mode Janus state."""
    if cutoff is None:
        cutoff = single_mode_cutoff(max(s.xi.x, s.zeta.x), tail_tol)
    if cutoff < 0 or cutoff % 2:
        raise ValueError("cutoff must be even and >= 0")
    phase = complex(math.cos(s.delta), math.sin(s.delta))
    return (s.chi * squeezed_vacuum_coefficients(s.xi, cutoff)
            + s.eta * phase * squeezed_vacuum_coefficients(s.zeta, cutoff))


def _normalized(c: np.ndarray) -> np.ndarray:
    n2 = float(np.sum(np.abs(c) ** 2))
    if n2 <= NORM_EPS:
        raise DegenerateSuperpositionError(f"superposition norm {n2:.3e} <= {NORM_EPS:g}")
    return c / math.sqrt(n2)


def wigner_from_fock(c: np.ndarray, x, p) -> np.ndarray:
    r"""Wigner function of the pure state with Fock amplitudes ``c`` (assumed normalized).

    Uses the Laguerre closed form of the ``|m><n|`` Wigner kernels,

    .. math::

        W_{m,m+d} = \frac{(-1)^m}{\pi} \sqrt{\frac{m!}{(m+d)!}} (2\alpha)^d
                    L_m^{(d)}(4|\alpha|^2) e^{-2|\alpha|^2},
        \qquad \alpha = (x + i p)/\sqrt 2,

    with ``sqrt(m!/(m+d)!) L_m^(d) B^(d/2) e^(-B/2)`` generated by a rescaled
    three-term recurrence in ``m`` so no factorial or power is ever formed.
    """
    c = np.asarray(c, dtype=complex)
    x = np.asarray(x, dtype=float)
    p = np.asarray(p, dtype=float)
    big_b = 2.0 * (x * x + p * p)
    angle = np.arctan2(p, x)
    log_b = np.log(np.where(big_b > 0, big_b, 1.0))
    nz = np.flatnonzero(c)
    if nz.size == 0:
        return np.zeros(np.broadcast(x, p).shape)
    n_max = int(nz[-1])
    sign = (-1.0) ** np.arange(n_max + 1)
    w = np.zeros(np.broadcast(x, p).shape)
    for d in range(n_max + 1):
        # rho[m, m+d] = c_m conj(c_{m+d})
        rho = c[: n_max + 1 - d] * np.conj(c[d: n_max + 1])
        if not np.any(rho):
            continue
        if d == 0:
            f = np.exp(-0.5 * big_b)
        else:
            f = np.where(big_b > 0, np.exp(0.5 * d * log_b - 0.5 * big_b - 0.5 * gammaln(d + 1)), 0.0)
        f_prev = np.zeros_like(f)
        acc = np.zeros(w.shape, dtype=complex)
        last = int(np.flatnonzero(rho)[-1])
        for m in range(last + 1):
            if rho[m] != 0:
                acc += rho[m] * sign[m] * f
            if m < last:
                f, f_prev = (
                    ((2 * m + 1 + d - big_b) * f - math.sqrt(m * (m + d)) * f_prev)
                    / math.sqrt((m + 1) * (m + 1 + d)),
                    f,
                )
        if d == 0:
            w += acc.real
        else:
            w += 2.0 * (acc * np.exp(1j * d * angle)).real
    return w / math.pi


def wigner_grid(s: JanusConfig, extent: float = DEFAULT_EXTENT, points: int = DEFAULT_POINTS,
                cutoff: int | None = None) -> WignerGrid:
    """Wigner function of the normalized single-mode Janus state on ``[-extent, extent]**2``."""
    if extent <= 0:
        raise ValueError("extent must be > 0")
    if points < 3 or points % 2 == 0:
        raise ValueError("points must be odd (so the grid contains the origin) and >= 3")
    c = _normalized(janus_fock_coefficients(s, cutoff))
    axis = np.linspace(-extent, extent, points)
    axis[points // 2] = 0.0
    xx, pp = np.meshgrid(axis, axis, indexing="ij")
    return WignerGrid(axis, axis.copy(), wigner_from_fock(c, xx, pp))


def parity_check(s: JanusConfig, cutoff: int | None = None) -> float:
    """``pi W(0,0)`` minus the photon-number parity; zero for a correct Wigner evaluation."""
    c = _normalized(janus_fock_coefficients(s, cutoff))
    parity = float(np.sum((-1.0) ** np.arange(c.size) * np.abs(c) ** 2))
    w0 = float(wigner_from_fock(c, 0.0, 0.0))
    return math.pi * w0 - parity
