"""Brute-force twin-Fock engine.

States are amplitude lists over ``|n, n>``. Every closed-form result in the
package is checked against direct sums over these amplitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import InvalidConfigError, JanusConfig, SqueezeParam

TAIL_TOL = 1e-14
MAX_CUTOFF = 512
EXPM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class TwinFockVector:
    """Truncated amplitudes ``c_0 .. c_N`` on the twin-Fock states ``|n, n>``.

    ``adequate`` is False when the last amplitude still carries more than
    ``tail_tol`` probability, i.e. the cutoff is too small for the state.
    """

    amplitudes: np.ndarray
    tail_tol: float = TAIL_TOL

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size == 0:
            raise ValueError("a twin-Fock vector needs at least one amplitude")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def cutoff(self) -> int:
        return self.amplitudes.size - 1

    @property
    def norm2(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    @property
    def adequate(self) -> bool:
        return abs(self.amplitudes[-1]) ** 2 <= self.tail_tol

    def padded(self, cutoff: int) -> np.ndarray:
        if cutoff < self.cutoff:
            raise ValueError("cannot pad to a smaller cutoff")
        out = np.zeros(cutoff + 1, dtype=complex)
        out[: self.amplitudes.size] = self.amplitudes
        return out

    def __len__(self):
        return self.amplitudes.size


def adequate_cutoff(x: float, weight_power: int = 0, tail_tol: float = TAIL_TOL,
                    cap: int = MAX_CUTOFF) -> int:
    """Smallest ``N`` with ``(N+1)**weight_power * x**N < tail_tol`` past the weight's peak.

    ``weight_power`` accounts for moment weights such as ``[n^(k)]**2 ~ n**(2k)``.
    """
    if not 0.0 <= x < 1.0:
        raise ValueError("x must lie in [0, 1)")
    if x == 0.0:
        return 0
    log_x = math.log(x)
    n = max(0, math.ceil(math.log(tail_tol) / log_x))
    if weight_power:
        # past n* = -p / log x the weighted term decreases monotonically
        n = max(n, math.ceil(-weight_power / log_x))
        while n < cap and weight_power * math.log(n + 1) + n * log_x >= math.log(tail_tol):
            n += 1
    return min(n, cap)


def falling_factorial(n: np.ndarray, k: int) -> np.ndarray:
    """``n (n-1) ... (n-k+1)`` elementwise; zero whenever ``n < k``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    n = np.asarray(n, dtype=float)
    out = np.ones_like(n)
    for j in range(k):
        out *= np.maximum(n - j, 0.0)
    return out


def build_tmss_vector(p: SqueezeParam, cutoff: int | None = None,
                      tail_tol: float = TAIL_TOL) -> TwinFockVector:
    """Twin-Fock amplitudes ``(tanh r e^{i theta})**n / cosh r`` of a squeezed vacuum."""
    if cutoff is None:
        cutoff = adequate_cutoff(p.x, tail_tol=tail_tol)
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    n = np.arange(cutoff + 1)
    amps = p.alpha ** n / math.cosh(p.r)
    if p.r == 0:
        amps = np.zeros(cutoff + 1, dtype=complex)
        amps[0] = 1.0
    return TwinFockVector(amps, tail_tol)


def build_tmjs_vector(cfg: JanusConfig, cutoff: int | None = None,
                      tail_tol: float = TAIL_TOL) -> TwinFockVector:
    """Unnormalized superposition ``chi |xi> + eta e^{i delta} |zeta>``."""
    if cfg.chi == 0 and cfg.eta == 0:
        raise InvalidConfigError("chi and eta cannot both be zero")
    if cutoff is None:
        cutoff = adequate_cutoff(max(cfg.xi.x, cfg.zeta.x), tail_tol=tail_tol)
    a = build_tmss_vector(cfg.xi, cutoff, tail_tol).amplitudes
    b = build_tmss_vector(cfg.zeta, cutoff, tail_tol).amplitudes
    phase = complex(math.cos(cfg.delta), math.sin(cfg.delta))
    return TwinFockVector(cfg.chi * a + cfg.eta * phase * b, tail_tol)


def _aligned(u: TwinFockVector, v: TwinFockVector):
    n = max(u.cutoff, v.cutoff)
    return u.padded(n), v.padded(n)


def inner_product(u: TwinFockVector, v: TwinFockVector) -> complex:
    """``<u|v>``; the shorter vector is zero-padded."""
    a, b = _aligned(u, v)
    return complex(np.vdot(a, b))


def _weights(n: np.ndarray, k: int, kind: str) -> np.ndarray:
    if k < 0:
        raise ValueError("moment order k must be >= 0")
    ff = falling_factorial(n, k)
    if kind == "single":
        return ff
    if kind == "cross":
        return ff * ff
    raise ValueError(f"kind must be 'single' or 'cross', got {kind!r}")


def factorial_moment_single(v: TwinFockVector, k: int) -> float:
    """Normalized ``<(a^dag)^k a^k>``."""
    p = np.abs(v.amplitudes) ** 2
    w = _weights(np.arange(v.cutoff + 1), k, "single")
    return float(np.sum(w * p) / np.sum(p))


def factorial_moment_cross(v: TwinFockVector, k: int) -> float:
    """Normalized ``<(a^dag b^dag)^k (ab)^k>``."""
    p = np.abs(v.amplitudes) ** 2
    w = _weights(np.arange(v.cutoff + 1), k, "cross")
    return float(np.sum(w * p) / np.sum(p))


def cross_state_moment(u: TwinFockVector, v: TwinFockVector, k: int,
                       kind: str = "single") -> complex:
    """Off-diagonal ``<u|O_k|v>`` by direct summation, without normalization."""
    a, b = _aligned(u, v)
    w = _weights(np.arange(a.size), k, kind)
    return complex(np.sum(np.conj(a) * b * w))


def expm_apply_tridiagonal(lower: np.ndarray, upper: np.ndarray, v: np.ndarray,
                           diag: np.ndarray | None = None, tol: float = EXPM_TOL) -> np.ndarray:
    """``exp(G) v`` for a tridiagonal ``G``.

    ``lower[i] = G[i+1, i]`` and ``upper[i] = G[i, i+1]``. The exponent is split
    into ``s`` steps with ``||G||_1 / s <= 1`` and each step is a Taylor series
    truncated once the next term falls below ``tol`` relative to the iterate.
    """
    lower = np.asarray(lower, dtype=complex)
    upper = np.asarray(upper, dtype=complex)
    diag = np.zeros(len(v), dtype=complex) if diag is None else np.asarray(diag, dtype=complex)

    def matvec(w):
        out = diag * w
        out[1:] += lower * w[:-1]
        out[:-1] += upper * w[1:]
        return out

    col = np.abs(diag).copy()
    col[:-1] += np.abs(lower)
    col[1:] += np.abs(upper)
    steps = max(1, math.ceil(float(col.max(initial=0.0))))

    w = np.array(v, dtype=complex)
    for _ in range(steps):
        term = w.copy()
        acc = w.copy()
        j = 0
        while True:
            j += 1
            term = matvec(term) / (steps * j)
            acc += term
            if np.linalg.norm(term) <= tol * max(np.linalg.norm(acc), 1e-300) or j > 200:
                break
        w = acc
    return w


def _working_size(cutoff: int, pad: int | None) -> int:
    return cutoff + (max(cutoff, 64) if pad is None else pad)


def su11_matexp_apply(p: SqueezeParam, cutoff: int | None = None, tol: float = EXPM_TOL,
                      pad: int | None = None, tail_tol: float = TAIL_TOL) -> TwinFockVector:
    """Apply ``exp(xi K+ - xi* K-)`` to ``|0,0>`` numerically.

    On the twin-Fock ladder ``K+|n,n> = (n+1)|n+1,n+1>`` and
    ``K-|n,n> = n|n-1,n-1>``. The ladder is truncated at ``cutoff + pad`` and
    the result is cut back to ``cutoff`` so that the reflecting edge of the
    truncated generator does not feed back into the kept amplitudes.
    """
    if cutoff is None:
        cutoff = adequate_cutoff(p.x, tail_tol=tail_tol)
    size = _working_size(cutoff, pad) + 1
    n = np.arange(size - 1)
    lower = p.xi * (n + 1)
    upper = -np.conj(p.xi) * (n + 1)
    v = np.zeros(size, dtype=complex)
    v[0] = 1.0
    out = expm_apply_tridiagonal(lower, upper, v, tol=tol)
    return TwinFockVector(out[: cutoff + 1], tail_tol)
