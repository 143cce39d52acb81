"""Pulse envelopes and the two-color drive in the frame of the first pulse."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.special import expit

from .core import HBAR, InvalidArgumentError


class PulseShape(str, enum.Enum):
    GAUSSIAN = "gaussian"
    SMOOTH_RECTANGULAR = "smooth_rectangular"


_SHAPE_FIELDS = {
    PulseShape.GAUSSIAN: ("area", "sigma"),
    PulseShape.SMOOTH_RECTANGULAR: ("amplitude", "tau", "kappa"),
}


@dataclass(frozen=True)
class PulseSpec:
    """A single laser pulse.

    Gaussian pulses are parameterized by ``area`` (units of pi) and
    ``sigma`` (ps); smoothed rectangular pulses by the plateau value
    ``amplitude`` (meV), the plateau duration ``tau`` (ps) and the edge
    rate ``kappa`` (1/ps).  ``detuning`` is the laser-minus-transition
    energy in meV.  Use :meth:`gaussian` and :meth:`rectangular` rather
    than the raw constructor.
    """

    shape: PulseShape
    detuning: float
    area: Optional[float] = None
    sigma: Optional[float] = None
    amplitude: Optional[float] = None
    tau: Optional[float] = None
    kappa: Optional[float] = None
    center: float = 0.0
    phase: float = 0.0

    def __post_init__(self):
        shape = PulseShape(self.shape)
        object.__setattr__(self, "shape", shape)
        own = _SHAPE_FIELDS[shape]
        for other_shape, names in _SHAPE_FIELDS.items():
            for name in names:
                value = getattr(self, name)
                if name in own and value is None:
                    raise InvalidArgumentError(f"{shape.value} pulse needs '{name}'")
                if name not in own and value is not None:
                    raise InvalidArgumentError(f"'{name}' is not a parameter of a {shape.value} pulse")
        if shape is PulseShape.GAUSSIAN:
            if not self.sigma > 0:
                raise InvalidArgumentError(f"sigma must be positive, got {self.sigma}")
            if not self.area >= 0:
                raise InvalidArgumentError(f"area must be non-negative, got {self.area}")
        else:
            if not self.tau > 0:
                raise InvalidArgumentError(f"tau must be positive, got {self.tau}")
            if not self.kappa > 0:
                raise InvalidArgumentError(f"kappa must be positive, got {self.kappa}")
            if not self.amplitude >= 0:
                raise InvalidArgumentError(f"amplitude must be non-negative, got {self.amplitude}")

    @classmethod
    def gaussian(cls, area, sigma, detuning, center=0.0, phase=0.0) -> "PulseSpec":
        return cls(PulseShape.GAUSSIAN, detuning=detuning, area=area, sigma=sigma,
                   center=center, phase=phase)

    @classmethod
    def rectangular(cls, amplitude, tau, kappa, detuning, center=0.0, phase=0.0) -> "PulseSpec":
        return cls(PulseShape.SMOOTH_RECTANGULAR, detuning=detuning, amplitude=amplitude,
                   tau=tau, kappa=kappa, center=center, phase=phase)

    @property
    def peak(self) -> float:
        """Maximum of the envelope in meV."""
        return float(envelope(self, self.center))

    def extent(self) -> tuple:
        """Default simulation window around the pulse (ps)."""
        if self.shape is PulseShape.GAUSSIAN:
            return self.center - 6 * self.sigma, self.center + 6 * self.sigma
        return self.center - self.tau, self.center + self.tau


def envelope(p: PulseSpec, t):
    """Envelope value hbar*Omega(t) in meV; vectorized over ``t``."""
    s = np.asarray(t, dtype=float) - p.center
    if p.shape is PulseShape.GAUSSIAN:
        peak = HBAR * p.area * np.pi / (np.sqrt(2 * np.pi) * p.sigma)
        return peak * np.exp(-(s ** 2) / (2 * p.sigma ** 2))
    # expit(z) = 1/(1+exp(-z)) avoids overflow far outside the plateau
    return p.amplitude * expit(p.kappa * (p.tau / 2 + s)) * expit(p.kappa * (p.tau / 2 - s))


@dataclass(frozen=True)
class TwoColorDrive:
    """First pulse plus an optional second pulse of a different color."""

    pulse1: PulseSpec
    pulse2: Optional[PulseSpec] = None

    def __post_init__(self):
        if self.pulse2 is not None and self.pulse2.detuning == self.pulse1.detuning:
            raise InvalidArgumentError("the two pulses must have different detunings")

    @property
    def energy_difference(self) -> float:
        """hbar*omega_Delta = hbar*(Delta_1 - Delta_2) in meV; 0 without a second pulse."""
        if self.pulse2 is None:
            return 0.0
        return self.pulse1.detuning - self.pulse2.detuning

    @property
    def omega_delta(self) -> float:
        """Angular frequency difference in rad/ps."""
        return self.energy_difference / HBAR

    @property
    def pulses(self) -> tuple:
        return (self.pulse1,) if self.pulse2 is None else (self.pulse1, self.pulse2)

    def extent(self) -> tuple:
        lo, hi = zip(*(p.extent() for p in self.pulses))
        return min(lo), max(hi)


def rotating_frame_drive(d: TwoColorDrive, t):
    """Coupling hbar*[Omega_1(t) + Omega_2(t) exp(i(omega_Delta t + phi_2 - phi_1))] in meV.

    Vectorized over ``t``; returns complex values.
    """
    t = np.asarray(t, dtype=float)
    out = envelope(d.pulse1, t).astype(complex)
    if d.pulse2 is not None:
        dphi = d.pulse2.phase - d.pulse1.phase
        out = out + envelope(d.pulse2, t) * np.exp(1j * (d.omega_delta * t + dphi))
    return out
