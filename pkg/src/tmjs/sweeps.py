"""Parameter sweeps over two axes, CSV persistence and PPM heatmaps.

A sweep evaluates one observable on a rectangular grid of two parameters
drawn from ``r, s, theta, phi, delta, chi, eta, k``. Parameters that are not
swept take their value from ``fixed`` or from :data:`DEFAULTS`; when ``s`` is
neither swept nor fixed it follows ``r`` (the symmetric ``r = s`` setting).

CSV layout: ``# key=value`` header lines, one column-name line, then one
``axis1,axis2,value`` row per cell in row-major order, 17 significant digits.
Failed cells are written as ``nan``.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .coherence import g_cross_tmjs, g_single_tmjs, mean_photon_tmjs
from .params import JanusConfig, JanusError, SqueezeParam
from .wigner import SingleModeJanus, wigner_grid

PARAM_NAMES = ("r", "s", "theta", "phi", "delta", "chi", "eta", "k")
OBSERVABLES = ("g_single", "g_cross", "mean_photon", "wigner_min")
DEFAULTS = {"r": 0.5, "theta": 0.0, "phi": 0.0, "delta": 0.0, "chi": 1.0, "eta": 1.0}
R_FLOOR = 1e-4
FAIL_FRACTION = 0.5
SWEEP_WIGNER_POINTS = 101
OUTPUT_ENV = "TMJS_OUTPUT_DIR"


class SweepFailedError(JanusError):
    pass


@dataclass(frozen=True)
class Axis:
    name: str
    start: float
    stop: float
    count: int

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)

    def __str__(self):
        return f"{self.name},{self.start!r},{self.stop!r},{self.count}"

    @classmethod
    def parse(cls, text: str) -> "Axis":
        name, start, stop, count = (t.strip() for t in text.split(","))
        return cls(name, float(start), float(stop), int(count))


@dataclass(frozen=True)
class SweepSpec:
    axis1: Axis
    axis2: Axis
    observable: str = "g_single"
    k: int = 2
    fixed: dict = field(default_factory=dict)
    log10_output: bool = False
    clamp_floor: float = 1e-300
    normalized: bool = True

    def __post_init__(self):
        for ax in (self.axis1, self.axis2):
            if ax.name not in PARAM_NAMES:
                raise ValueError(f"unknown axis parameter {ax.name!r}; choose from {PARAM_NAMES}")
            if ax.count < 2:
                raise ValueError("axis counts must be >= 2")
        if self.axis1.name == self.axis2.name:
            raise ValueError("the two axes must sweep different parameters")
        if self.observable not in OBSERVABLES:
            raise ValueError(f"unknown observable {self.observable!r}; choose from {OBSERVABLES}")
        for key in self.fixed:
            if key not in PARAM_NAMES:
                raise ValueError(f"unknown fixed parameter {key!r}")
            if key in (self.axis1.name, self.axis2.name):
                raise ValueError(f"parameter {key!r} is both swept and fixed")
        if self.clamp_floor <= 0:
            raise ValueError("clamp_floor must be > 0")

    @property
    def diverges_at_zero_r(self) -> bool:
        return self.observable in ("g_single", "g_cross")

    def axis_values(self, axis: Axis) -> np.ndarray:
        vals = axis.values()
        if axis.name == "k":
            vals = np.rint(vals)
        if axis.name in ("r", "s") and self.diverges_at_zero_r:
            vals = np.maximum(vals, R_FLOOR)
        return vals

    def resolved_fixed(self) -> dict:
        """Every non-swept parameter with its effective value (``s`` may read ``"r"``)."""
        swept = {self.axis1.name, self.axis2.name}
        out = {k: v for k, v in DEFAULTS.items() if k not in swept}
        out.update(self.fixed)
        if "k" not in swept:
            out.setdefault("k", self.k)
        if "s" not in swept and "s" not in out:
            out["s"] = "r"
        return out

    def to_dict(self) -> dict:
        d = asdict(self)
        d["axis1"], d["axis2"] = str(self.axis1), str(self.axis2)
        return d


@dataclass(eq=False)
class SweepGrid:
    axis1_name: str
    axis1: np.ndarray
    axis2_name: str
    axis2: np.ndarray
    values: np.ndarray  # values[i, j] at (axis1[i], axis2[j])
    header: dict = field(default_factory=dict)

    @property
    def error_count(self) -> int:
        return int(np.isnan(self.values).sum())

    def equals(self, other: "SweepGrid") -> bool:
        return (
            self.axis1_name == other.axis1_name
            and self.axis2_name == other.axis2_name
            and np.array_equal(self.axis1, other.axis1)
            and np.array_equal(self.axis2, other.axis2)
            and np.array_equal(self.values, other.values, equal_nan=True)
        )


@dataclass
class RunRecord:
    spec: dict
    timestamp: str
    version: str
    outputs: list
    checksum: str
    error_count: int
    cells: int

    def write(self, path) -> Path:
        return _atomic_write(Path(path), json.dumps(asdict(self), indent=2, sort_keys=True) + "\n")


# --- evaluation -------------------------------------------------------------

def cell_params(spec: SweepSpec, v1: float, v2: float) -> dict:
    params = spec.resolved_fixed()
    params[spec.axis1.name] = v1
    params[spec.axis2.name] = v2
    if params.get("s") == "r":
        params["s"] = params["r"]
    if spec.diverges_at_zero_r:
        params["r"] = max(params["r"], R_FLOOR)
        params["s"] = max(params["s"], R_FLOOR)
    return params


def evaluate_cell(observable: str, params: dict, normalized: bool = True) -> float:
    """Observable at one parameter point; domain errors become NaN."""
    k = int(round(params["k"]))
    try:
        xi = SqueezeParam(params["r"], params["theta"])
        zeta = SqueezeParam(params["s"], params["phi"])
        if observable == "wigner_min":
            state = SingleModeJanus(xi, zeta, params["chi"], params["eta"], params["delta"])
            return wigner_grid(state, points=SWEEP_WIGNER_POINTS).min_value
        cfg = JanusConfig(xi, zeta, params["chi"], params["eta"], params["delta"])
        if observable == "g_single":
            return g_single_tmjs(cfg, k, normalized)
        if observable == "g_cross":
            return g_cross_tmjs(cfg, k, normalized)
        return mean_photon_tmjs(cfg, normalized)
    except JanusError:
        return math.nan


def _evaluate_row(args) -> list:
    spec, v1, axis2 = args
    out = []
    for v2 in axis2:
        val = evaluate_cell(spec.observable, cell_params(spec, float(v1), float(v2)), spec.normalized)
        if spec.log10_output and not math.isnan(val):
            val = math.log10(max(val, spec.clamp_floor))
        out.append(val)
    return out


def evaluate_sweep(spec: SweepSpec, workers: int = 1) -> SweepGrid:
    """Evaluate the observable on the grid; rows may be spread over processes."""
    a1, a2 = spec.axis_values(spec.axis1), spec.axis_values(spec.axis2)
    jobs = [(spec, v1, a2) for v1 in a1]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_evaluate_row, jobs))
    else:
        rows = [_evaluate_row(job) for job in jobs]
    header = {
        "observable": spec.observable,
        "k": str(spec.k),
        "normalized": str(spec.normalized).lower(),
        "log10_output": str(spec.log10_output).lower(),
        "clamp_floor": repr(spec.clamp_floor),
        "axis1": str(spec.axis1),
        "axis2": str(spec.axis2),
    }
    for key, val in sorted(spec.resolved_fixed().items()):
        header[key] = val if isinstance(val, str) else format(val, ".17g")
    return SweepGrid(spec.axis1.name, a1, spec.axis2.name, a2, np.array(rows, dtype=float), header)


# --- persistence ------------------------------------------------------------

def _fmt(v: float) -> str:
    return "nan" if math.isnan(v) else format(float(v), ".17g")


def grid_to_csv(grid: SweepGrid) -> str:
    lines = [f"# {k}={v}" for k, v in grid.header.items()]
    lines.append(f"{grid.axis1_name},{grid.axis2_name},value")
    for i, v1 in enumerate(grid.axis1):
        for j, v2 in enumerate(grid.axis2):
            lines.append(f"{_fmt(v1)},{_fmt(v2)},{_fmt(grid.values[i, j])}")
    return "\n".join(lines) + "\n"


def csv_to_grid(text: str) -> SweepGrid:
    header, rows, names = {}, [], None
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, val = line[1:].strip().partition("=")
            header[key] = val
        elif names is None:
            names = line.split(",")
        else:
            rows.append([float(t) for t in line.split(",")])
    if names is None or len(names) != 3:
        raise ValueError("missing 'axis1,axis2,value' column line")
    data = np.array(rows, dtype=float).reshape(-1, 3)
    a1 = np.array(list(dict.fromkeys(data[:, 0])))
    a2 = np.array(list(dict.fromkeys(data[:, 1])))
    if a1.size * a2.size != data.shape[0]:
        raise ValueError("rows do not form a rectangular grid")
    values = data[:, 2].reshape(a1.size, a2.size)
    return SweepGrid(names[0], a1, names[1], a2, values, header)


def _atomic_write(path: Path, content, binary: bool = False) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb" if binary else "w") as fh:
            fh.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def write_grid_csv(grid: SweepGrid, path) -> Path:
    return _atomic_write(Path(path), grid_to_csv(grid))


def read_grid_csv(path) -> SweepGrid:
    return csv_to_grid(Path(path).read_text())


def sha256_file(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


# --- heatmaps ---------------------------------------------------------------

_LOW = np.array([48.0, 18.0, 100.0])
_HIGH = np.array([253.0, 231.0, 37.0])


def heatmap_bytes(values: np.ndarray) -> bytes:
    """Binary PPM of a 2-D array: first index runs left to right, second bottom to top.

    Colours interpolate linearly from dark violet (minimum) to yellow
    (maximum); NaN cells are black.
    """
    values = np.asarray(values, dtype=float)
    finite = np.isfinite(values)
    if not finite.any():
        raise ValueError("cannot render a grid with no finite cells")
    lo, hi = values[finite].min(), values[finite].max()
    t = np.zeros_like(values) if hi == lo else (values - lo) / (hi - lo)
    rgb = np.rint(_LOW + t[..., None] * (_HIGH - _LOW))
    rgb[~finite] = 0.0
    image = np.transpose(rgb, (1, 0, 2))[::-1]  # rows = second axis, top row = largest value
    width, height = values.shape
    return f"P6\n{width} {height}\n255\n".encode("ascii") + image.astype(np.uint8).tobytes()


def render_heatmap(grid: SweepGrid, path) -> Path:
    return _atomic_write(Path(path), heatmap_bytes(grid.values), binary=True)


def read_ppm(path) -> tuple[int, int, np.ndarray]:
    """Parse a binary PPM written by :func:`render_heatmap` into ``(width, height, pixels)``."""
    data = Path(path).read_bytes()
    magic, dims, maxval, rest = data.split(b"\n", 3)
    if magic != b"P6" or maxval != b"255":
        raise ValueError("not an 8-bit binary PPM")
    width, height = (int(t) for t in dims.split())
    return width, height, np.frombuffer(rest, dtype=np.uint8).reshape(height, width, 3)


# --- runs -------------------------------------------------------------------

def output_dir(out_dir=None) -> Path:
    return Path(out_dir if out_dir is not None else os.environ.get(OUTPUT_ENV, "."))


def run_sweep(spec: SweepSpec, out_dir=None, name: str | None = None, workers: int = 1,
              heatmap: bool = False) -> tuple[SweepGrid, RunRecord]:
    """Evaluate, persist CSV (+ optional PPM) and an atomic JSON run record."""
    grid = evaluate_sweep(spec, workers)
    cells = grid.values.size
    if grid.error_count > FAIL_FRACTION * cells:
        raise SweepFailedError(f"{grid.error_count} of {cells} cells failed")
    base = output_dir(out_dir)
    name = name or f"{spec.observable}_k{spec.k}_{spec.axis1.name}_{spec.axis2.name}"
    csv_path = write_grid_csv(grid, base / f"{name}.csv")
    outputs = [str(csv_path)]
    if heatmap:
        outputs.append(str(render_heatmap(grid, base / f"{name}.ppm")))
    record = RunRecord(
        spec=spec.to_dict(),
        timestamp=datetime.now(timezone.utc).isoformat(),
        version=__version__,
        outputs=outputs,
        checksum=sha256_file(csv_path),
        error_count=grid.error_count,
        cells=cells,
    )
    record.write(base / f"{name}.run.json")
    return grid, record
