"""JSON run configurations.

Energies carry a ``_mev`` suffix, times ``_ps`` (or ``_fs`` for step
sizes) and pulse areas ``_pi``.  The schema ships with the package as
``run_config.schema.json``; unknown keys are rejected.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Optional, Union

import jsonschema

from .conditions import Branch, DesignResult, design_second_pulse, gaussian_design
from .core import InvalidArgumentError, TimeGrid
from .model import SystemConfig, SystemKind
from .propagator import PropagationSettings
from .pulses import PulseShape, PulseSpec, TwoColorDrive

DEFAULT_DT_FS = 1.0
DEFAULT_SAMPLE_FS = 10.0
#: Second-pulse duration used by ``design:`` requests without ``sigma_ps``.
DEFAULT_DESIGN_SIGMA = 4.0


class ConfigError(InvalidArgumentError):
    """Invalid run configuration; the message names the offending field."""


def load_schema() -> dict:
    text = resources.files(__package__).joinpath("run_config.schema.json").read_text("utf-8")
    return json.loads(text)


@dataclass(frozen=True)
class DesignRequest:
    """Second pulse computed from the analytic conditions."""

    branch: Branch = Branch.POSITIVE
    sigma: float = DEFAULT_DESIGN_SIGMA
    area: Optional[float] = None
    center: float = 0.0
    phase: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "branch", Branch(self.branch))


@dataclass(frozen=True)
class RunConfig:
    system: SystemKind
    pulse1: PulseSpec
    pulse2: Union[PulseSpec, DesignRequest, None] = None
    binding_energy: Optional[float] = None
    t_start: Optional[float] = None
    t_end: Optional[float] = None
    dt_fs: float = DEFAULT_DT_FS
    sample_fs: float = DEFAULT_SAMPLE_FS
    outputs: dict = field(default_factory=lambda: {"trajectory": True, "dressed": True, "design": True})
    convergence_check: bool = True
    name: Optional[str] = None
    # compact string form of a default design request, kept for round trips
    pulse2_shorthand: bool = False

    def __post_init__(self):
        object.__setattr__(self, "system", SystemKind(self.system))
        object.__setattr__(self, "outputs", MappingProxyType(dict(self.outputs)))

    # ------------------------------------------------------------ resolution

    def design(self) -> Optional[DesignResult]:
        """Analytic design for the first pulse, or ``None`` if not applicable."""
        p1 = self.pulse1
        branch = self.pulse2.branch if isinstance(self.pulse2, DesignRequest) else Branch.POSITIVE
        if self.system is not SystemKind.TWO_LEVEL:
            return None
        if p1.shape is PulseShape.SMOOTH_RECTANGULAR:
            if p1.amplitude <= 0:
                return None
            return design_second_pulse(p1.detuning, p1.amplitude, branch)
        return gaussian_design(p1.area, p1.sigma, p1.detuning, branch)

    def resolved_pulse2(self) -> Optional[PulseSpec]:
        if not isinstance(self.pulse2, DesignRequest):
            return self.pulse2
        req = self.pulse2
        if self.system is not SystemKind.TWO_LEVEL:
            raise ConfigError("pulse2: design requests are only defined for two-level systems")
        result = self.design()
        if result is None:
            raise ConfigError("pulse2: design needs a first pulse with positive amplitude")
        area = req.area if req.area is not None else result.area2
        if area is None:
            raise ConfigError("pulse2: a Gaussian first pulse fixes only the detuning; give 'area_pi'")
        return PulseSpec.gaussian(area, req.sigma, result.delta2, req.center, req.phase)

    def drive(self) -> TwoColorDrive:
        return TwoColorDrive(self.pulse1, self.resolved_pulse2())

    def grid(self) -> TimeGrid:
        if self.t_start is None:
            lo, hi = self.drive().extent()
        else:
            lo, hi = self.t_start, self.t_end
        return TimeGrid(lo, hi, self.sample_fs * 1e-3)

    def system_config(self) -> SystemConfig:
        try:
            return SystemConfig(self.system, self.drive(), self.grid(), self.binding_energy)
        except ConfigError:
            raise
        except InvalidArgumentError as exc:
            raise ConfigError(str(exc)) from exc

    def settings(self) -> PropagationSettings:
        return PropagationSettings(dt=self.dt_fs * 1e-3, convergence_check=self.convergence_check)

    # ------------------------------------------------------------ JSON

    def to_dict(self) -> dict:
        d = {}
        if self.name is not None:
            d["name"] = self.name
        d["system"] = self.system.value
        if self.binding_energy is not None:
            d["binding_energy_mev"] = self.binding_energy
        d["pulse1"] = pulse_to_dict(self.pulse1)
        if isinstance(self.pulse2, PulseSpec):
            d["pulse2"] = pulse_to_dict(self.pulse2)
        elif isinstance(self.pulse2, DesignRequest):
            if self.pulse2_shorthand:
                d["pulse2"] = f"design:{self.pulse2.branch.value}"
            else:
                req = {"design": self.pulse2.branch.value, "sigma_ps": self.pulse2.sigma}
                if self.pulse2.area is not None:
                    req["area_pi"] = self.pulse2.area
                req["center_ps"] = self.pulse2.center
                req["phase_rad"] = self.pulse2.phase
                d["pulse2"] = req
        grid = {}
        if self.t_start is not None:
            grid = {"t_start_ps": self.t_start, "t_end_ps": self.t_end}
            grid["dt_fs"] = self.dt_fs
            grid["sample_fs"] = self.sample_fs
            d["grid"] = grid
        d["outputs"] = dict(self.outputs)
        d["convergence_check"] = self.convergence_check
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        validator = jsonschema.Draft202012Validator(load_schema())
        errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
        if errors:
            err = jsonschema.exceptions.best_match(errors)
            where = "/".join(str(p) for p in err.absolute_path) or "<root>"
            raise ConfigError(f"{where}: {err.message}")
        try:
            p1 = pulse_from_dict(data["pulse1"])
            raw2 = data.get("pulse2")
            shorthand = isinstance(raw2, str)
            if raw2 is None:
                p2 = None
            elif shorthand:
                p2 = DesignRequest(Branch(raw2.split(":", 1)[1]))
            elif "design" in raw2:
                p2 = DesignRequest(
                    Branch(raw2["design"]),
                    sigma=raw2.get("sigma_ps", DEFAULT_DESIGN_SIGMA),
                    area=raw2.get("area_pi"),
                    center=raw2.get("center_ps", 0.0),
                    phase=raw2.get("phase_rad", 0.0),
                )
            else:
                p2 = pulse_from_dict(raw2)
        except InvalidArgumentError as exc:
            raise ConfigError(f"pulse: {exc}") from exc
        grid = data.get("grid", {})
        outputs = {"trajectory": True, "dressed": True, "design": True}
        outputs.update(data.get("outputs", {}))
        cfg = cls(
            system=SystemKind(data["system"]),
            pulse1=p1,
            pulse2=p2,
            binding_energy=data.get("binding_energy_mev"),
            t_start=grid.get("t_start_ps"),
            t_end=grid.get("t_end_ps"),
            dt_fs=grid.get("dt_fs", DEFAULT_DT_FS),
            sample_fs=grid.get("sample_fs", DEFAULT_SAMPLE_FS),
            outputs=outputs,
            convergence_check=data.get("convergence_check", True),
            name=data.get("name"),
            pulse2_shorthand=shorthand,
        )
        cfg.system_config()  # surface model-level errors at load time
        return cfg

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
        return cls.from_dict(data)

    @classmethod
    def load(cls, path) -> "RunConfig":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))

    def dump(self, path) -> None:
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")


def pulse_to_dict(p: PulseSpec) -> dict:
    if p.shape is PulseShape.GAUSSIAN:
        d = {"shape": p.shape.value, "area_pi": p.area, "sigma_ps": p.sigma}
    else:
        d = {"shape": p.shape.value, "amplitude_mev": p.amplitude, "tau_ps": p.tau,
             "kappa_per_ps": p.kappa}
    d.update(detuning_mev=p.detuning, center_ps=p.center, phase_rad=p.phase)
    return d


def pulse_from_dict(d: dict) -> PulseSpec:
    common = dict(detuning=d["detuning_mev"], center=d.get("center_ps", 0.0), phase=d.get("phase_rad", 0.0))
    if d["shape"] == PulseShape.GAUSSIAN.value:
        return PulseSpec.gaussian(d["area_pi"], d["sigma_ps"], **common)
    return PulseSpec.rectangular(d["amplitude_mev"], d["tau_ps"], d["kappa_per_ps"], **common)
