"""Rotating-frame Hamiltonians of the two-level and exciton-biexciton systems.

The frame always co-rotates with the first pulse.  Both Hamiltonians are
tridiagonal in the bare basis: the diagonal holds the frame-shifted bare
energies and every nearest-neighbour element below the diagonal equals
``-1/2 * rotating_frame_drive(t)`` (equal dipole coupling for g-x and x-xx).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .core import HermitianOperator, InvalidArgumentError, TimeGrid
from .pulses import TwoColorDrive, envelope, rotating_frame_drive


class SystemKind(str, enum.Enum):
    TWO_LEVEL = "two_level"
    BIEXCITON = "biexciton"


@dataclass(frozen=True)
class SystemConfig:
    kind: SystemKind
    drive: TwoColorDrive
    grid: TimeGrid
    binding_energy: Optional[float] = None

    def __post_init__(self):
        kind = SystemKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is SystemKind.BIEXCITON and self.binding_energy is None:
            raise InvalidArgumentError("biexciton system needs a binding energy")
        if kind is SystemKind.TWO_LEVEL and self.binding_energy is not None:
            raise InvalidArgumentError("two-level system takes no binding energy")

    @property
    def dim(self) -> int:
        return 2 if self.kind is SystemKind.TWO_LEVEL else 3

    def with_pulse2(self, pulse2) -> "SystemConfig":
        return replace(self, drive=TwoColorDrive(self.drive.pulse1, pulse2))

    def first_pulse_only(self) -> "SystemConfig":
        return replace(self, drive=TwoColorDrive(self.drive.pulse1))


def bare_energies(cfg: SystemConfig) -> np.ndarray:
    """Diagonal of the rotating-frame Hamiltonian in meV."""
    d1 = cfg.drive.pulse1.detuning
    if cfg.kind is SystemKind.TWO_LEVEL:
        return np.array([0.0, -d1])
    return np.array([0.0, -d1, -(2 * d1 + cfg.binding_energy)])


def coupling(cfg: SystemConfig, t, first_pulse_only: bool = False):
    """Lower off-diagonal element H[k+1, k] (meV); vectorized over ``t``."""
    if first_pulse_only:
        return -0.5 * envelope(cfg.drive.pulse1, t).astype(complex)
    return -0.5 * rotating_frame_drive(cfg.drive, t)


def _assemble(diag, w) -> HermitianOperator:
    dim = diag.size
    h = np.diag(diag).astype(complex)
    for k in range(dim - 1):
        h[k + 1, k] = w
        h[k, k + 1] = np.conj(w)
    return HermitianOperator(h)


def hamiltonian_tls(cfg: SystemConfig, t: float, first_pulse_only: bool = False) -> HermitianOperator:
    """2x2 rotating-frame Hamiltonian of the two-level system at time ``t``."""
    if cfg.kind is not SystemKind.TWO_LEVEL:
        raise InvalidArgumentError("hamiltonian_tls needs a two-level configuration")
    return _assemble(bare_energies(cfg), complex(coupling(cfg, t, first_pulse_only)))


def hamiltonian_3ls(cfg: SystemConfig, t: float, first_pulse_only: bool = False) -> HermitianOperator:
    """3x3 rotating-frame Hamiltonian of the exciton-biexciton system at time ``t``.

    There is no direct g-xx element.
    """
    if cfg.kind is not SystemKind.BIEXCITON:
        raise InvalidArgumentError("hamiltonian_3ls needs a biexciton configuration")
    return _assemble(bare_energies(cfg), complex(coupling(cfg, t, first_pulse_only)))


def hamiltonian(cfg: SystemConfig, t: float, first_pulse_only: bool = False) -> HermitianOperator:
    if cfg.kind is SystemKind.TWO_LEVEL:
        return hamiltonian_tls(cfg, t, first_pulse_only)
    return hamiltonian_3ls(cfg, t, first_pulse_only)


def first_pulse_hamiltonians(cfg: SystemConfig, times) -> np.ndarray:
    """Real matrices H_0 + H_Omega1 at each of ``times``, shape ``(n, dim, dim)``."""
    times = np.atleast_1d(np.asarray(times, dtype=float))
    diag = bare_energies(cfg)
    w = -0.5 * envelope(cfg.drive.pulse1, times)
    h = np.zeros((times.size, cfg.dim, cfg.dim))
    h[:, range(cfg.dim), range(cfg.dim)] = diag
    for k in range(cfg.dim - 1):
        h[:, k + 1, k] = w
        h[:, k, k + 1] = w
    return h
