"""Single-mode Janus Wigner functions: where the negativity comes from.

Equal-phase branches give a Gaussian; flipping the relative squeeze phase
and the Janus phase carves out negative fringes.
"""
import math
import os
from pathlib import Path

from tmjs.sweeps import SweepGrid, render_heatmap, write_grid_csv
from tmjs.wigner import SingleModeJanus, parity_check, wigner_grid

out = Path(os.environ.get("TMJS_OUTPUT_DIR", "wigner"))
r = 0.8
states = {
    "equal_phases": SingleModeJanus.symmetric(r, 0.0, 0.0),
    "quarter_turn": SingleModeJanus.symmetric(r, math.pi / 2, math.pi),
    "antisymmetric": SingleModeJanus.symmetric(r, math.pi, math.pi),
    "half_turn_in_phase": SingleModeJanus.symmetric(r, math.pi, 0.0),
}
for name, state in states.items():
    grid = wigner_grid(state)
    wide = wigner_grid(state, extent=4 + 2 * r)
    sg = SweepGrid("x", grid.x_axis, "p", grid.p_axis, grid.values, {"state": name})
    write_grid_csv(sg, out / f"{name}.csv")
    render_heatmap(sg, out / f"{name}.ppm")
    print(f"{name:16s} min W={grid.min_value:+.4f}  negative area={grid.negative_area:.4f}  "
          f"integral={wide.integral():.5f}  parity residual={parity_check(state):+.1e}")
