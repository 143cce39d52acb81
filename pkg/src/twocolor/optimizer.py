"""Search over second-pulse detuning and area for maximal final occupation.

A row-major grid scan over the bounds picks the starting cell, which is
then refined with a bounded Nelder-Mead simplex.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from .core import EXCITON, BIEXCITON, IntegrationError, InvalidArgumentError
from .model import SystemConfig, SystemKind
from .propagator import PropagationSettings, propagate
from .pulses import PulseShape, PulseSpec

log = logging.getLogger(__name__)

TARGETS = {"x": EXCITON, "xx": BIEXCITON}
SIMPLEX_FRACTION = 0.05
XTOL = 1e-3


class OptimizationError(RuntimeError):
    pass


@dataclass(frozen=True)
class OptimizationProblem:
    """Free second-pulse detuning (meV) and area (pi) within box bounds.

    ``base.drive.pulse2`` is the Gaussian template whose ``detuning`` and
    ``area`` are replaced by the candidates; all its other fields are kept.
    """

    base: SystemConfig
    target: str
    detuning_bounds: tuple
    area_bounds: tuple
    grid_points: tuple = (21, 21)
    refine_iterations: int = 200
    settings: PropagationSettings = field(default_factory=PropagationSettings)

    def __post_init__(self):
        if self.target not in TARGETS:
            raise InvalidArgumentError(f"target must be one of {sorted(TARGETS)}, got {self.target!r}")
        if TARGETS[self.target] >= self.base.dim:
            raise InvalidArgumentError(f"target {self.target!r} does not exist in a {self.base.kind.value} system")
        p2 = self.base.drive.pulse2
        if p2 is None or p2.shape is not PulseShape.GAUSSIAN:
            raise InvalidArgumentError("base configuration needs a Gaussian second-pulse template")
        for name in ("detuning_bounds", "area_bounds"):
            lo, hi = getattr(self, name)
            if not lo < hi:
                raise InvalidArgumentError(f"{name} is empty: {(lo, hi)}")
            object.__setattr__(self, name, (float(lo), float(hi)))
        if self.area_bounds[0] < 0:
            raise InvalidArgumentError("pulse areas must be non-negative")
        if not (
                self.detuning_bounds[0] > self.base.drive.pulse1.detuning
                or self.detuning_bounds[1] < self.base.drive.pulse1.detuning):
            raise InvalidArgumentError("detuning bounds must not contain the first-pulse detuning")
        if min(self.grid_points) < 3:
            raise InvalidArgumentError("need at least 3 grid points per axis")
        if self.refine_iterations < 0:
            raise InvalidArgumentError("refine_iterations must be non-negative")

    @property
    def lower(self) -> np.ndarray:
        return np.array([self.detuning_bounds[0], self.area_bounds[0]])

    @property
    def upper(self) -> np.ndarray:
        return np.array([self.detuning_bounds[1], self.area_bounds[1]])

    def contains(self, detuning, area) -> bool:
        return bool(np.all(self.lower <= [detuning, area]) and np.all([detuning, area] <= self.upper))

    def config(self, detuning: float, area: float) -> SystemConfig:
        p2 = replace(self.base.drive.pulse2, detuning=float(detuning), area=float(area))
        return self.base.with_pulse2(p2)


@dataclass
class OptimizationResult:
    best_detuning: float
    best_area: float
    objective: float
    evaluations: int
    trace: list
    seed: Optional[tuple] = None
    seed_objective: Optional[float] = None

    def as_dict(self) -> dict:
        return {
            "best_detuning_mev": self.best_detuning,
            "best_area_pi": self.best_area,
            "objective": self.objective,
            "evaluations": self.evaluations,
            "seed": None if self.seed is None else {"detuning_mev": self.seed[0], "area_pi": self.seed[1]},
            "seed_objective": self.seed_objective,
        }


def objective(problem: OptimizationProblem, detuning: float, area: float) -> float:
    """Final occupation of the target level for the given second pulse."""
    if not problem.contains(detuning, area):
        raise InvalidArgumentError(f"({detuning}, {area}) lies outside the bounds")
    traj = propagate(problem.config(detuning, area), settings=problem.settings)
    return float(traj.occupation(TARGETS[problem.target])[-1])


def _safe_objective(problem, point) -> float:
    try:
        return objective(problem, point[0], point[1])
    except IntegrationError as exc:
        log.warning("evaluation at %s failed: %s", point, exc)
        return float("nan")


def scan(problem: OptimizationProblem, workers: int = 1):
    """Row-major grid scan (detuning outer, area inner).

    Returns ``(detunings, areas, values)`` with ``values`` shaped
    ``(n_detuning, n_area)``.
    """
    nd, na = problem.grid_points
    detunings = np.linspace(*problem.detuning_bounds, nd)
    areas = np.linspace(*problem.area_bounds, na)
    points = [(d, a) for d in detunings for a in areas]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(lambda p: _safe_objective(problem, p), points))
    else:
        values = [_safe_objective(problem, p) for p in points]
    return detunings, areas, np.array(values).reshape(nd, na)


def optimize(problem: OptimizationProblem, seed: Optional[tuple] = None, workers: int = 1) -> OptimizationResult:
    """Grid scan then Nelder-Mead refinement of the best cell (or the seed, if better).

    ``seed`` is an optional ``(detuning, area)`` starting guess such as the
    analytic design; it is evaluated and competes with the grid optimum.
    """
    trace = []
    detunings, areas, values = scan(problem, workers)
    for i, d in enumerate(detunings):
        for j, a in enumerate(areas):
            trace.append((float(d), float(a), float(values[i, j])))

    seed_value = None
    if seed is not None and problem.contains(*seed):
        seed_value = _safe_objective(problem, seed)
        trace.append((float(seed[0]), float(seed[1]), seed_value))

    finite = [t for t in trace if np.isfinite(t[2])]
    if not finite:
        raise OptimizationError("every objective evaluation failed")
    start = max(finite, key=lambda t: t[2])

    def negative(x):
        value = _safe_objective(problem, x)
        trace.append((float(x[0]), float(x[1]), value))
        return -value if np.isfinite(value) else np.inf

    if problem.refine_iterations > 0:
        x0 = np.array(start[:2])
        step = SIMPLEX_FRACTION * (problem.upper - problem.lower)
        simplex = [x0]
        for k in range(2):
            vertex = x0.copy()
            # step inward when the start sits on the upper bound
            vertex[k] += step[k] if x0[k] + step[k] <= problem.upper[k] else -step[k]
            simplex.append(vertex)
        minimize(
            negative, x0, method="Nelder-Mead",
            bounds=list(zip(problem.lower, problem.upper)),
            options={
                "initial_simplex": np.array(simplex),
                "maxiter": problem.refine_iterations,
                "xatol": XTOL,
                "fatol": np.inf,
                "adaptive": False,
            },
        )

    finite = [t for t in trace if np.isfinite(t[2])]
    best = max(finite, key=lambda t: t[2])
    log.info("optimum %.4f meV, %.4f pi -> %.6f after %d evaluations", *best, len(trace))
    return OptimizationResult(
        best_detuning=best[0],
        best_area=best[1],
        objective=best[2],
        evaluations=len(trace),
        trace=trace,
        seed=None if seed is None else (float(seed[0]), float(seed[1])),
        seed_objective=seed_value,
    )
