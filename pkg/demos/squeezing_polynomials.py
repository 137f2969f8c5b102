"""Squeezing polynomials and the cross-mode coherence of a single TMSS.

Prints the first few polynomials, checks that four independent ways of writing
them agree, and shows how g_ab^(k) blows up as r -> 0.
"""
import math

import numpy as np

from tmjs.polynomials import (
    binomial_weight_sum,
    euler_transformed_2f1,
    eval_2f1_terminating,
    legendre_cross_check,
    squeezing_polynomial,
)
from tmjs.params import SqueezeParam
from tmjs.tmss import g_cross_tmss

for k in range(1, 6):
    print(f"P_{k}(x) = {squeezing_polynomial(k)}")

# same inner sum, four routes
x = 0.37
for k in (2, 5, 8):
    inner = squeezing_polynomial(k).inner_value(x)
    print(f"k={k}: inner={inner:.12g}  2F1={eval_2f1_terminating(k, x):.12g}  "
          f"euler={euler_transformed_2f1(k, x):.12g}  leibniz={binomial_weight_sum(k, x):.12g}  "
          f"legendre rel.err={legendre_cross_check(k, x):.1e}")

# baseline: no interference, g_ab^(k) ~ r^(-2k) for small r, -> k!^2 C(2k,k) for large r
r = np.geomspace(1e-3, 3.0, 9)
print("\n      r " + "".join(f"      k={k}" for k in range(1, 5)))
for v in r:
    row = "".join(f" {g_cross_tmss(k, SqueezeParam(v)):9.3e}" for k in range(1, 5))
    print(f"{v:7.3g}{row}")
print("large-r limits:", [math.factorial(k) ** 2 * math.comb(2 * k, k) for k in range(1, 5)])
