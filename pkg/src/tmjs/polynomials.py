r"""Squeezing polynomials and the unnormalized cross-mode moment.

The cross-mode factorial moment of a two-mode squeezed vacuum is

.. math::

    F_k(x) = \frac{P_k(x)}{(1-x)^{2k}}, \qquad
    P_k(x) = (k!)^2 x^k \sum_{j=0}^{k} \binom{k}{j}^2 x^j ,

with ``x = tanh(r)**2``. The inner sum is the terminating hypergeometric
``2F1(-k, -k; 1; x)`` and is also expressible through a Legendre polynomial.
All three forms are available here so they can check one another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

K_MAX = 12
LEGENDRE_X_MAX = 0.999


@lru_cache(maxsize=None)
def _pascal_row(k: int) -> tuple[int, ...]:
    row = [1]
    for _ in range(k):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
    return tuple(row)


def _inner_coefficients(k: int) -> tuple[int, ...]:
    return tuple(c * c for c in _pascal_row(k))


@dataclass(frozen=True)
class SqueezingPolynomial:
    """``P_k(x) = scale * x**k * sum_j inner[j] * x**j`` with exact integers."""

    k: int
    inner: tuple[int, ...]
    scale: int

    @property
    def degree(self) -> int:
        return 2 * self.k

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Full coefficient list, index ``i`` multiplies ``x**i``."""
        return (0,) * self.k + tuple(self.scale * c for c in self.inner)

    def inner_value(self, x):
        """Horner evaluation of the inner polynomial; accepts real, complex or arrays."""
        acc = 0
        for c in reversed(self.inner):
            acc = acc * x + c
        return acc

    def __call__(self, x):
        return self.scale * x**self.k * self.inner_value(x)

    def __str__(self):
        terms = []
        for j, c in enumerate(self.inner):
            if j == 0:
                terms.append(str(c))
            else:
                power = "x" if j == 1 else f"x^{j}"
                terms.append(power if c == 1 else f"{c}{power}")
        lead = "" if self.scale == 1 else str(self.scale)
        xk = "" if self.k == 0 else ("x" if self.k == 1 else f"x^{self.k}")
        return f"{lead}{xk}({' + '.join(terms)})"


def squeezing_polynomial(k: int, k_max: int = K_MAX) -> SqueezingPolynomial:
    """Exact squeezing polynomial of order ``k``."""
    if not isinstance(k, (int, np.integer)) or k < 0 or k > k_max:
        raise ValueError(f"order k must be an integer in [0, {k_max}], got {k!r}")
    k = int(k)
    return SqueezingPolynomial(k, _inner_coefficients(k), math.factorial(k) ** 2)


def _check_unit_interval(x):
    xa = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(xa)) or np.any(xa < 0) or np.any(xa >= 1):
        raise ValueError("x must lie in [0, 1)")


def eval_Fk(k: int, x):
    """Unnormalized cross-mode moment ``F_k(x) = P_k(x) / (1 - x)**(2k)``."""
    _check_unit_interval(x)
    poly = squeezing_polynomial(k)
    if np.ndim(x) == 0:
        x = float(x)
    else:
        x = np.asarray(x, dtype=float)
    return poly(x) / (1.0 - x) ** (2 * k)


def _terminating_2f1(a: int, b, c, z):
    """``2F1(a, b; c; z)`` for a non-positive integer ``a`` as a finite series."""
    if a > 0:
        raise ValueError("series only terminates for a <= 0")
    term = 1.0
    total = 1.0
    for j in range(-a):
        term = term * (a + j) * (b + j) / ((c + j) * (j + 1)) * z
        total = total + term
    return total


def eval_2f1_terminating(k: int, x):
    """``2F1(-k, -k; 1; x)`` summed term by term from its hypergeometric ratio."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return _terminating_2f1(-k, -k, 1, x)


def euler_transformed_2f1(k: int, x):
    """``(1-x)**k * 2F1(-k, k+1; 1; -x/(1-x))``, equal to ``2F1(-k,-k;1;x)``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return (1.0 - x) ** k * _terminating_2f1(-k, k + 1, 1, -x / (1.0 - x))


def binomial_weight_sum(k: int, x):
    """``sum_j C(k,j) C(k+j,j) x**j (1-x)**(k-j)``, the form produced by the Leibniz rule."""
    return sum(
        math.comb(k, j) * math.comb(k + j, j) * x**j * (1.0 - x) ** (k - j) for j in range(k + 1)
    )


def legendre_p(k: int, t):
    """Legendre polynomial by upward three-term recurrence (stable for ``t >= 1``)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    p_prev, p = 1.0, t
    if k == 0:
        return p_prev * np.ones_like(t) if np.ndim(t) else 1.0
    for n in range(1, k):
        p_prev, p = p, ((2 * n + 1) * t * p - n * p_prev) / (n + 1)
    return p


def legendre_form(k: int, x: float) -> float:
    """``(k!)**2 x**k (1-x)**k P_k((1+x)/(1-x))``."""
    if not 0.0 < x <= LEGENDRE_X_MAX:
        raise ValueError(f"x must lie in (0, {LEGENDRE_X_MAX}] for the Legendre form")
    t = (1.0 + x) / (1.0 - x)
    return math.factorial(k) ** 2 * x**k * (1.0 - x) ** k * legendre_p(k, t)


def legendre_cross_check(k: int, x: float) -> float:
    """Relative deviation between the Legendre form and the coefficient form of ``P_k(x)``."""
    direct = squeezing_polynomial(k)(x)
    return abs(legendre_form(k, x) - direct) / abs(direct)
