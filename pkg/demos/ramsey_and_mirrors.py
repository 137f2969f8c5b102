"""Dynamics: disentangling, Ramsey sequences and moving-mirror flux."""
import math

import numpy as np

from tmjs import SqueezeParam, g_cross_tmjs, g_cross_tmss
from tmjs.dynamics import (
    MirrorTrajectory,
    SchmidtModePair,
    ramsey_sequence,
    schmidt_mode_tmjs,
    schwarzian_flux,
    wei_norman_refinement_ratio,
    wei_norman_residuals,
)

p = SqueezeParam(0.7, 1.1)
print(f"Wei-Norman residual on 1001 points: {wei_norman_residuals(p, np.linspace(0, 1, 1001)):.2e}, "
      f"refinement ratio {wei_norman_refinement_ratio(p):.3f}")

# beta is purely imaginary and follows sin(phi)
for phi in np.linspace(0, math.pi, 5):
    m = ramsey_sequence(0.5, phi)
    print(f"phi={phi:5.3f}  beta={m.beta:+.6f}  |a|^2-|b|^2-1={m.defect:+.1e}")

# two dwell phases half a turn apart make opposite squeezes; superposed at delta=pi they cancel
first, second = ramsey_sequence(0.3, math.pi / 2), ramsey_sequence(0.3, 3 * math.pi / 2)
cfg = schmidt_mode_tmjs(SchmidtModePair.from_maps(first, second), 1.0, 1.0, math.pi)
for k in range(1, 4):
    print(f"k={k}: Janus g_ab={g_cross_tmjs(cfg, k):.3e}  single history={g_cross_tmss(k, first.squeeze):.3e}")

for label, traj in [
    ("inertial", MirrorTrajectory(lambda u: 2 * u + 1)),
    ("mobius", MirrorTrajectory(lambda u: (2 * u + 1) / (0.5 * u + 3))),
    ("exponential", MirrorTrajectory(lambda u: -math.exp(-u))),
]:
    print(f"{label:12s} flux={schwarzian_flux(traj, 0.0):+.8f}")
print(f"{'expected':12s} flux={1 / (48 * math.pi):+.8f} for the exponential mirror")
