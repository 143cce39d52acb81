"""Command-line interface.

Subcommands: ``run``, ``design``, ``optimize``, ``sweep``, ``scenarios``.
Exit codes: 0 success, 1 I/O error, 2 usage or validation error,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from .conditions import Branch, design_second_pulse, detuning_table, gaussian_design
from .config import ConfigError, RunConfig
from .core import LEVEL_NAMES, IntegrationError, InvalidArgumentError
from .dressed import project
from .export import write_dressed, write_json, write_trace, write_trajectory, write_csv
from .model import SystemKind
from .optimizer import OptimizationError, OptimizationProblem, optimize, scan
from .presets import PRESETS, describe, preset
from .propagator import convergence_report, propagate
from .pulses import PulseShape, PulseSpec

log = logging.getLogger("twocolor")

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


def _load(args) -> RunConfig:
    name = args.preset or args.scenario
    if name is not None:
        return preset(name)
    return RunConfig.load(args.config)


def _add_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("scenario", nargs="?", choices=list(PRESETS), help="named scenario")
    src.add_argument("--preset", choices=list(PRESETS), help="named scenario")
    src.add_argument("--config", type=Path, help="JSON run configuration")
    p.add_argument("--output-dir", type=Path, default=Path("."), help="directory for output files")


# ---------------------------------------------------------------- run

def run(cfg: RunConfig, output_dir) -> dict:
    """Propagate a configuration and write its output files; returns the summary."""
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    system = cfg.system_config()
    settings = cfg.settings()
    traj = propagate(system, settings=settings)
    dtraj = project(traj, system)

    if cfg.outputs.get("trajectory", True):
        write_trajectory(output_dir / "trajectory.csv", traj, system)
    if cfg.outputs.get("dressed", True):
        write_dressed(output_dir / "dressed.csv", dtraj, system)

    final = traj.final_state
    resolved = replace(cfg, pulse2=system.drive.pulse2, pulse2_shorthand=False)
    design = cfg.design() if cfg.outputs.get("design", True) else None
    summary = {
        "scenario": cfg.name,
        "parameters": resolved.to_dict(),
        "omega_delta_mev": system.drive.energy_difference,
        "final_occupations": {LEVEL_NAMES[k]: float(abs(a) ** 2) for k, a in enumerate(final.amplitudes)},
        "final_dressed_occupations": [float(v) for v in dtraj.occupations[-1]],
        "max_norm_drift": float(np.max(np.abs(traj.norms - 1))),
        "design": None if design is None else design.as_dict(),
        "convergence": convergence_report(system, settings=settings) if cfg.convergence_check else None,
    }
    write_json(output_dir / "summary.json", summary)
    return summary


def _cmd_run(args) -> int:
    cfg = _load(args)
    summary = run(cfg, args.output_dir)
    occ = summary["final_occupations"]
    print("final occupations: " + ", ".join(f"{k}={v:.6f}" for k, v in occ.items()))
    print(f"wrote {args.output_dir}")
    return EXIT_OK


# ---------------------------------------------------------------- design

def _cmd_design(args) -> int:
    if args.gaussian:
        if args.area is None or args.sigma is None:
            raise InvalidArgumentError("--gaussian needs --area and --sigma")
        results = {b: gaussian_design(args.area, args.sigma, args.delta1, b) for b in Branch}
        chosen = results[Branch(args.sign)]
        print(f"Gaussian first pulse: area {args.area:g} pi, sigma {args.sigma:g} ps, "
              f"detuning {args.delta1:g} meV")
        print(f"peak splitting      {chosen.rabi_splitting:10.4f} meV")
        print(f"c_tilde^2 at peak   {chosen.c_tilde_sq:10.4f}")
        for b, r in results.items():
            print(f"Delta_2 (omega_Delta {b.value:8s}) {r.delta2:10.4f} meV")
        payload = {"first_pulse": {"shape": "gaussian", "area_pi": args.area, "sigma_ps": args.sigma,
                                   "detuning_mev": args.delta1},
                   "design": chosen.as_dict(),
                   "branches": {b.value: r.as_dict() for b, r in results.items()}}
    else:
        if args.amplitude is None:
            raise InvalidArgumentError("rectangular design needs --amplitude")
        chosen = design_second_pulse(args.delta1, args.amplitude, args.sign)
        print(f"Rectangular first pulse: amplitude {args.amplitude:g} meV, detuning {args.delta1:g} meV")
        print(f"Rabi splitting      {chosen.rabi_splitting:10.4f} meV")
        print(f"c_tilde^2           {chosen.c_tilde_sq:10.4f}")
        print(f"Delta_2             {chosen.delta2:10.4f} meV  (omega_Delta {chosen.omega_delta_sign.value})")
        print(f"area_2              {chosen.area2:10.4f} pi")
        payload = {"first_pulse": {"shape": "smooth_rectangular", "amplitude_mev": args.amplitude,
                                   "detuning_mev": args.delta1},
                   "design": chosen.as_dict()}
        if args.delta1 != 0:
            table = detuning_table(abs(args.delta1), args.amplitude)
            d = abs(args.delta1)
            print()
            print(f"{'Delta_2 [meV]':>16} {f'Delta_1 = {-d:g}':>16} {f'Delta_1 = {d:+g}':>16}")
            for b in Branch:
                label = "omega_Delta > 0" if b is Branch.POSITIVE else "omega_Delta < 0"
                print(f"{label:>16} {table[(-d, b)]:16.4f} {table[(d, b)]:16.4f}")
            payload["table"] = [{"delta1_mev": k[0], "omega_delta_sign": k[1].value, "delta2_mev": v}
                                for k, v in table.items()]
    if args.json is not None:
        write_json(args.json, payload)
    return EXIT_OK


# ---------------------------------------------------------------- optimize / sweep

def _problem(args) -> tuple:
    cfg = _load(args)
    system = cfg.system_config()
    p1 = system.drive.pulse1
    template = system.drive.pulse2
    sigma2 = args.sigma2
    if sigma2 is None:
        if template is not None and template.shape is PulseShape.GAUSSIAN:
            sigma2 = template.sigma
        elif p1.shape is PulseShape.GAUSSIAN:
            sigma2 = p1.sigma
        else:
            sigma2 = 4.0

    seed = None
    design = cfg.design()
    if design is not None and design.area2 is not None:
        seed = (design.delta2, design.area2)

    det_bounds = args.detuning_bounds
    area_bounds = args.area_bounds
    if det_bounds is None:
        if seed is not None:
            det_bounds = (seed[0] - 1.0, seed[0] + 1.0)
        elif design is not None:
            det_bounds = (design.delta2 - 1.0, design.delta2 + 1.0)
        else:
            det_bounds = (p1.detuning - 8.0, p1.detuning - 5.0)
    if area_bounds is None:
        area_bounds = (max(0.0, seed[1] - 1.0), seed[1] + 1.0) if seed is not None else (10.0, 30.0)

    center = template.center if template is not None else p1.center
    guess = PulseSpec.gaussian(float(np.mean(area_bounds)), sigma2, float(np.mean(det_bounds)), center)
    base = system.with_pulse2(guess)
    problem = OptimizationProblem(
        base, args.target, tuple(det_bounds), tuple(area_bounds),
        grid_points=tuple(args.grid_points),
        refine_iterations=getattr(args, "refine_iterations", 0),
        settings=cfg.settings(),
    )
    return problem, seed


def _cmd_optimize(args) -> int:
    problem, seed = _problem(args)
    result = optimize(problem, seed=seed, workers=args.workers)
    out = args.output_dir
    out.mkdir(parents=True, exist_ok=True)
    write_trace(out / "opt_trace.csv", result.trace)
    payload = result.as_dict()
    payload.update(target=problem.target, detuning_bounds_mev=list(problem.detuning_bounds),
                   area_bounds_pi=list(problem.area_bounds), grid_points=list(problem.grid_points),
                   refine_iterations=problem.refine_iterations, sigma2_ps=problem.base.drive.pulse2.sigma)
    write_json(out / "opt_result.json", payload)
    print(f"best Delta_2 = {result.best_detuning:.4f} meV, area_2 = {result.best_area:.4f} pi, "
          f"occupation({problem.target}) = {result.objective:.6f} after {result.evaluations} evaluations")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    problem, _ = _problem(args)
    detunings, areas, values = scan(problem, workers=args.workers)
    rows = [(d, a, values[i, j]) for i, d in enumerate(detunings) for j, a in enumerate(areas)]
    out = args.output_dir
    out.mkdir(parents=True, exist_ok=True)
    write_csv(out / "sweep.csv", ["detuning_mev", "area_pi", "objective"], rows)
    i, j = np.unravel_index(np.nanargmax(values), values.shape)
    print(f"best grid point: Delta_2 = {detunings[i]:.4f} meV, area_2 = {areas[j]:.4f} pi, "
          f"occupation({problem.target}) = {values[i, j]:.6f}")
    return EXIT_OK


def _cmd_scenarios(args) -> int:
    for name in PRESETS:
        print(f"{name:10s} {describe(name)}")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twocolor", description=__doc__.splitlines()[0])
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="propagate a scenario and export trajectories")
    _add_source(p)
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("design", help="analytic second-pulse parameters")
    p.add_argument("--delta1", type=float, required=True, help="first-pulse detuning (meV)")
    p.add_argument("--amplitude", type=float, help="rectangular plateau amplitude (meV)")
    p.add_argument("--gaussian", action="store_true", help="Gaussian first pulse")
    p.add_argument("--area", type=float, help="Gaussian first-pulse area (units of pi)")
    p.add_argument("--sigma", type=float, help="Gaussian first-pulse duration (ps)")
    p.add_argument("--sign", choices=[b.value for b in Branch], default="positive",
                   help="sign of omega_Delta")
    p.add_argument("--json", type=Path, help="write the design as JSON to this file")
    p.set_defaults(func=_cmd_design)

    for name, func, helptext in (("optimize", _cmd_optimize, "numerical second-pulse search"),
                                 ("sweep", _cmd_sweep, "grid scan of the final occupation")):
        p = sub.add_parser(name, help=helptext)
        _add_source(p)
        p.add_argument("--target", choices=["x", "xx"], default="x")
        p.add_argument("--detuning-bounds", type=float, nargs=2, metavar=("LO", "HI"))
        p.add_argument("--area-bounds", type=float, nargs=2, metavar=("LO", "HI"))
        p.add_argument("--grid-points", type=int, nargs=2, default=(21, 21), metavar=("ND", "NA"))
        p.add_argument("--sigma2", type=float, help="second-pulse duration (ps)")
        p.add_argument("--workers", type=int, default=1)
        if name == "optimize":
            p.add_argument("--refine-iterations", type=int, default=200)
        p.set_defaults(func=func)

    p = sub.add_parser("scenarios", help="list the built-in scenarios")
    p.set_defaults(func=_cmd_scenarios)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ConfigError, InvalidArgumentError, KeyError) as exc:
        print(f"twocolor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IntegrationError, OptimizationError) as exc:
        print(f"twocolor: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"twocolor: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
