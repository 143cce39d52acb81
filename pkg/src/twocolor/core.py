"""Shared foundations: units, time grids, state vectors, operators, trajectories.

Units are fixed throughout the package: energies in meV, times in ps,
pulse areas in multiples of pi.  Angular frequencies are obtained as
``E / HBAR``.  Bare-state amplitudes are always ordered ``(g, x[, xx])``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

#: Reduced Planck constant in meV ps.
HBAR = 0.6582119569

GROUND, EXCITON, BIEXCITON = 0, 1, 2
LEVEL_NAMES = ("g", "x", "xx")

_NORM_TOL = 1e-9


class InvalidArgumentError(ValueError):
    """Raised when an operation receives arguments outside its domain."""


class IntegrationError(RuntimeError):
    """Raised when a propagation leaves its numerical trust region."""

    def __init__(self, message, time=None):
        super().__init__(message)
        self.time = time


def _frozen(a):
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class TimeGrid:
    """Uniform sampling grid ``t_start, t_start + dt, ..., t_end``.

    The number of intervals is ``round((t_end - t_start) / dt)``; the
    effective spacing is adjusted so that ``t_end`` is hit exactly.
    """

    t_start: float
    t_end: float
    dt: float

    def __post_init__(self):
        if not self.t_start < self.t_end:
            raise InvalidArgumentError(f"t_start={self.t_start} must be < t_end={self.t_end}")
        if not self.dt > 0:
            raise InvalidArgumentError(f"dt must be positive, got {self.dt}")
        if (self.t_end - self.t_start) / self.dt < 10:
            raise InvalidArgumentError("time grid needs at least 10 intervals")

    @property
    def n_intervals(self) -> int:
        return int(round((self.t_end - self.t_start) / self.dt))

    @property
    def step(self) -> float:
        """Effective sample spacing."""
        return (self.t_end - self.t_start) / self.n_intervals

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_intervals + 1)

    def __len__(self):
        return self.n_intervals + 1


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized pure state in the bare basis ``(g, x[, xx])``."""

    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if a.size not in (2, 3):
            raise InvalidArgumentError(f"state must have 2 or 3 amplitudes, got {a.size}")
        norm2 = float(np.sum(np.abs(a) ** 2))
        if abs(norm2 - 1.0) > _NORM_TOL:
            raise InvalidArgumentError(f"state is not normalized (sum |a|^2 = {norm2!r})")
        object.__setattr__(self, "amplitudes", _frozen(a))

    @classmethod
    def basis(cls, dim: int, level: int = GROUND) -> "StateVector":
        if not 0 <= level < dim:
            raise InvalidArgumentError(f"level {level} out of range for dim {dim}")
        a = np.zeros(dim, dtype=complex)
        a[level] = 1.0
        return cls(a)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return np.array_equal(self.amplitudes, other.amplitudes)

    def __repr__(self):
        return f"StateVector({self.amplitudes!r})"


def _amplitudes(state) -> np.ndarray:
    if isinstance(state, StateVector):
        return state.amplitudes
    return np.asarray(state, dtype=complex)


def occupation(state, level_index: int) -> float:
    """Occupation ``|a_k|^2`` of bare level ``level_index``."""
    a = _amplitudes(state)
    if not 0 <= level_index < a.shape[-1]:
        raise InvalidArgumentError(f"level index {level_index} out of range for dim {a.shape[-1]}")
    return float(abs(a[..., level_index]) ** 2) if a.ndim == 1 else np.abs(a[..., level_index]) ** 2


def coherence(state, j: int, k: int) -> complex:
    """Coherence ``a_j * conj(a_k)``."""
    a = _amplitudes(state)
    dim = a.shape[-1]
    if j == k:
        raise InvalidArgumentError("coherence needs two distinct levels")
    for idx in (j, k):
        if not 0 <= idx < dim:
            raise InvalidArgumentError(f"level index {idx} out of range for dim {dim}")
    c = a[..., j] * np.conj(a[..., k])
    return complex(c) if a.ndim == 1 else c


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """2x2 or 3x3 Hermitian matrix in meV, bare basis ordering."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.shape not in ((2, 2), (3, 3)):
            raise InvalidArgumentError(f"operator must be 2x2 or 3x3, got shape {m.shape}")
        if not np.array_equal(m, m.conj().T):
            raise InvalidArgumentError("operator is not Hermitian")
        object.__setattr__(self, "entries", _frozen(m))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def is_real(self) -> bool:
        return not np.any(self.entries.imag)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __eq__(self, other):
        if not isinstance(other, HermitianOperator):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __repr__(self):
        return f"HermitianOperator({self.entries!r})"


@dataclass(frozen=True, eq=False)
class Trajectory:
    """States sampled on a time grid.

    ``states`` has shape ``(len(grid), dim)``; ``norms`` holds the 2-norm
    of each sampled state.
    """

    grid: TimeGrid
    states: np.ndarray
    norms: np.ndarray = field(default=None)

    def __post_init__(self):
        s = np.asarray(self.states, dtype=complex)
        if s.ndim != 2 or s.shape[0] != len(self.grid) or s.shape[1] not in (2, 3):
            raise InvalidArgumentError(f"states shape {s.shape} does not match grid of {len(self.grid)} points")
        norms = np.linalg.norm(s, axis=1) if self.norms is None else np.asarray(self.norms, float)
        object.__setattr__(self, "states", _frozen(s))
        object.__setattr__(self, "norms", _frozen(norms))

    @property
    def times(self) -> np.ndarray:
        return self.grid.times

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    @property
    def occupations(self) -> np.ndarray:
        """Bare occupations, shape ``(n_times, dim)``."""
        return np.abs(self.states) ** 2

    @property
    def final_state(self) -> StateVector:
        return StateVector(self.states[-1] / self.norms[-1])

    def state(self, i: int) -> StateVector:
        return StateVector(self.states[i] / self.norms[i])

    def occupation(self, level_index: int) -> np.ndarray:
        return occupation(self.states, level_index)
