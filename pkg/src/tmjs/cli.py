"""Command-line front end.

Subcommands: ``coherence``, ``sweep``, ``wigner``, ``ramsey``, ``schwarzian``
and ``verify``. Defaults can be overridden by a JSON file passed with
``--config``; explicit flags win over the file. Files are written to
``--out-dir``, else ``$TMJS_OUTPUT_DIR``, else the current directory.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .coherence import evaluate
from .dynamics import MirrorTrajectory, SchmidtModePair, ramsey_sequence, schmidt_mode_tmjs, schwarzian_flux
from .params import JanusConfig, JanusError, SqueezeParam
from .sweeps import (
    OBSERVABLES,
    Axis,
    SweepGrid,
    SweepSpec,
    output_dir,
    render_heatmap,
    run_sweep,
    write_grid_csv,
)
from .verify import verify_suite
from .wigner import SingleModeJanus, wigner_grid

STATE_DEFAULTS = {"r": 0.8, "s": None, "theta": 0.0, "phi": 0.0, "chi": 1.0, "eta": 1.0, "delta": 0.0}


def _add_state_args(p: argparse.ArgumentParser):
    p.add_argument("--r", type=float, help="squeeze magnitude of the first branch")
    p.add_argument("--s", type=float, help="squeeze magnitude of the second branch (default: r)")
    p.add_argument("--theta", type=float, help="squeeze phase of the first branch")
    p.add_argument("--phi", type=float, help="squeeze phase of the second branch")
    p.add_argument("--chi", type=float, help="weight of the first branch")
    p.add_argument("--eta", type=float, help="weight of the second branch")
    p.add_argument("--delta", type=float, help="Janus phase")


def _state(args) -> dict:
    out = {}
    for key, default in STATE_DEFAULTS.items():
        val = getattr(args, key)
        out[key] = default if val is None else val
    if out["s"] is None:
        out["s"] = out["r"]
    return out


def _config(state: dict, cls=JanusConfig):
    return cls(SqueezeParam(state["r"], state["theta"]), SqueezeParam(state["s"], state["phi"]),
               state["chi"], state["eta"], state["delta"])


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_coherence(args) -> int:
    state = _state(args)
    res = evaluate(_config(state), args.observable, args.k, normalized=not args.unnormalized)
    kern = res.kernel
    _emit({**state, "observable": res.observable, "k": res.k, "value": res.value,
           "normalized": not args.unnormalized,
           "kernel": {"magnitude": kern.magnitude, "phase": kern.phase if kern.magnitude else 0.0}})
    return 0


def _parse_fixed(items) -> dict:
    out = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise SystemExit(f"--fixed expects key=value, got {item!r}")
        out[key.strip()] = float(val)
    return out


def cmd_sweep(args) -> int:
    spec = SweepSpec(
        axis1=Axis.parse(args.axis1),
        axis2=Axis.parse(args.axis2),
        observable=args.observable,
        k=args.k,
        fixed=_parse_fixed(args.fixed),
        log10_output=args.log10,
        clamp_floor=args.clamp_floor,
        normalized=not args.unnormalized,
    )
    _, record = run_sweep(spec, args.out_dir, args.name, args.workers, heatmap=args.heatmap)
    _emit(record.__dict__)
    return 0


def cmd_wigner(args) -> int:
    state = _state(args)
    grid = wigner_grid(_config(state, SingleModeJanus), args.extent, args.points)
    header = {key: format(val, ".17g") for key, val in state.items()}
    header.update(observable="wigner", extent=repr(args.extent), points=str(args.points))
    sweep_grid = SweepGrid("x", grid.x_axis, "p", grid.p_axis, grid.values, header)
    base = output_dir(args.out_dir)
    csv_path = write_grid_csv(sweep_grid, base / f"{args.name}.csv")
    ppm_path = render_heatmap(sweep_grid, base / f"{args.name}.ppm")
    _emit({**state, "min_value": grid.min_value, "negative_area": grid.negative_area,
           "integral": grid.integral(), "pi_W0": math.pi * grid.at_origin(),
           "outputs": [str(csv_path), str(ppm_path)]})
    return 0


def _map_json(m) -> dict:
    return {"alpha": [m.alpha.real, m.alpha.imag], "beta": [m.beta.real, m.beta.imag], "defect": m.defect}


def cmd_ramsey(args) -> int:
    first = ramsey_sequence(args.r, args.phi)
    out = {"r": args.r, "phi": args.phi, "map": _map_json(first)}
    if args.phi2 is not None:
        r2 = args.r if args.r2 is None else args.r2
        second = ramsey_sequence(r2, args.phi2)
        pair = SchmidtModePair.from_maps(first, second)
        cfg = schmidt_mode_tmjs(pair, args.chi, args.eta, args.delta)
        out["second"] = {"r": r2, "phi": args.phi2, "map": _map_json(second)}
        out["z"] = [pair.z.real, pair.z.imag]
        try:
            out["g_cross"] = evaluate(cfg, "g_cross", args.k).value
        except JanusError as exc:
            out["g_cross"] = None
            out["error"] = str(exc)
    _emit(out)
    return 0


def _builtin_trajectory(kind: str, kappa: float) -> MirrorTrajectory:
    if kind == "affine":
        return MirrorTrajectory(lambda u: 2.0 * u + 1.0)
    if kind == "mobius":
        return MirrorTrajectory(lambda u: (2.0 * u + 1.0) / (0.5 * u + 3.0))
    return MirrorTrajectory(lambda u: -math.exp(-kappa * u) / kappa)


def cmd_schwarzian(args) -> int:
    if args.csv:
        data = np.loadtxt(args.csv, delimiter=",", comments="#", ndmin=2)
        traj = MirrorTrajectory.from_samples(data[:, 0], data[:, 1])
        points = [args.u] if args.u is not None else list(traj.u_grid[2:-2])
        fluxes = [schwarzian_flux(traj, u) for u in points]
    else:
        traj = _builtin_trajectory(args.kind, args.kappa)
        points = [0.0 if args.u is None else args.u]
        fluxes = [schwarzian_flux(traj, u, args.step) for u in points]
    _emit({"u": points, "flux": fluxes})
    return 0


def cmd_verify(args) -> int:
    report = verify_suite(args.level, args.seed)
    print(report.format())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tmjs", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="JSON file of option defaults, flat or keyed by subcommand")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coherence", help="evaluate one observable (JSON to stdout)")
    _add_state_args(p)
    p.add_argument("--observable", default="g_cross",
                   choices=["g_single", "g_cross", "mean_photon", "moment_single", "moment_cross"])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--unnormalized", action="store_true", help="skip division by the state norm")
    p.set_defaults(func=cmd_coherence)

    p = sub.add_parser("sweep", help="evaluate an observable on a 2-D grid (CSV, optional PPM)")
    p.add_argument("--axis1", default="r,0.05,1.5,201", help="name,min,max,count")
    p.add_argument("--axis2", default=f"delta,0,{2 * math.pi!r},201", help="name,min,max,count")
    p.add_argument("--observable", default="g_single", choices=OBSERVABLES)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--fixed", action="append", metavar="KEY=VALUE", help="fix a parameter (repeatable)")
    p.add_argument("--log10", action="store_true")
    p.add_argument("--clamp-floor", type=float, default=1e-300)
    p.add_argument("--unnormalized", action="store_true")
    p.add_argument("--heatmap", action="store_true", help="also write a binary PPM")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--name", default=None)
    p.add_argument("--out-dir", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("wigner", help="single-mode Janus Wigner grid (CSV + PPM)")
    _add_state_args(p)
    p.add_argument("--extent", type=float, default=4.5)
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--name", default="wigner")
    p.add_argument("--out-dir", default=None)
    p.set_defaults(func=cmd_wigner)

    p = sub.add_parser("ramsey", help="squeeze-dwell-unsqueeze Bogoliubov map")
    p.add_argument("--r", type=float, default=0.5)
    p.add_argument("--phi", type=float, default=math.pi / 2)
    p.add_argument("--r2", type=float, default=None)
    p.add_argument("--phi2", type=float, default=None, help="dwell phase of a second history")
    p.add_argument("--chi", type=float, default=1.0)
    p.add_argument("--eta", type=float, default=1.0)
    p.add_argument("--delta", type=float, default=math.pi)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("schwarzian", help="moving-mirror energy flux")
    p.add_argument("--csv", help="sampled trajectory: rows 'u,p' on a uniform u grid")
    p.add_argument("--kind", choices=["affine", "exponential", "mobius"], default="exponential")
    p.add_argument("--kappa", type=float, default=1.0)
    p.add_argument("--u", type=float, default=None)
    p.add_argument("--step", type=float, default=1e-3)
    p.set_defaults(func=cmd_schwarzian)

    p = sub.add_parser("verify", help="closed-form vs brute-force checks; exit 1 on failure")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.add_argument("--seed", type=int, default=1234)
    p.set_defaults(func=cmd_verify)
    return parser


def _apply_config(parser: argparse.ArgumentParser, path: str, command: str):
    cfg = json.loads(Path(path).read_text())
    flat = {k: v for k, v in cfg.items() if not isinstance(v, dict)}
    flat.update(cfg.get(command, {}))
    sub = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    sub.choices[command].set_defaults(**{k.replace("-", "_"): v for k, v in flat.items()})


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        _apply_config(parser, args.config, args.command)
        args = parser.parse_args(argv)
    try:
        return args.func(args)
    except JanusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
