"""Fixed-step RK4 integration of i*hbar d/dt psi = H(t) psi."""
from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numba import njit

from .core import HBAR, IntegrationError, InvalidArgumentError, StateVector, Trajectory
from .model import SystemConfig, bare_energies, coupling

log = logging.getLogger(__name__)

#: Norm drift beyond this is treated as a failed integration.
HARD_NORM_LIMIT = 1e-6
#: Largest phase (rad) a single step may accumulate before a warning is issued.
MAX_STEP_PHASE = 0.1


@dataclass(frozen=True)
class PropagationSettings:
    """Integration step ``dt`` (ps) and norm monitoring.

    The sampling grid of :class:`SystemConfig` is subdivided into
    ``round(grid.step / dt)`` RK4 steps per sample.  With
    ``convergence_check`` on, the step is checked against the fastest
    phase rotation of the Hamiltonian before integrating.
    """

    dt: float = 0.001
    convergence_check: bool = True
    norm_tolerance: float = 1e-8

    def __post_init__(self):
        if not self.dt > 0:
            raise InvalidArgumentError(f"dt must be positive, got {self.dt}")
        if not self.norm_tolerance > 0:
            raise InvalidArgumentError(f"norm_tolerance must be positive, got {self.norm_tolerance}")


@njit(cache=True, nogil=True)
def _apply(energies, lower, psi, out):
    # tridiagonal Hermitian H with H[k+1, k] = lower[k]
    dim = psi.shape[0]
    for k in range(dim):
        out[k] = energies[k] * psi[k]
    for k in range(dim - 1):
        out[k + 1] += lower[k] * psi[k]
        out[k] += np.conj(lower[k]) * psi[k + 1]


@njit(cache=True, nogil=True)
def _rk4_tridiagonal(energies, lower, psi0, h, hbar, substeps, n_samples):
    """Integrate with couplings tabulated at half steps.

    ``lower[j]`` holds the couplings at ``t0 + j*h/2``, so a full step from
    index ``2n`` uses rows ``2n``, ``2n+1`` and ``2n+2``.
    """
    dim = psi0.shape[0]
    out = np.empty((n_samples, dim), dtype=np.complex128)
    psi = psi0.copy()
    k1 = np.empty(dim, dtype=np.complex128)
    k2 = np.empty(dim, dtype=np.complex128)
    k3 = np.empty(dim, dtype=np.complex128)
    k4 = np.empty(dim, dtype=np.complex128)
    tmp = np.empty(dim, dtype=np.complex128)
    f = -1j / hbar
    out[0] = psi
    row = 0
    for s in range(1, n_samples):
        for _ in range(substeps):
            _apply(energies, lower[row], psi, k1)
            for k in range(dim):
                k1[k] *= f
                tmp[k] = psi[k] + 0.5 * h * k1[k]
            _apply(energies, lower[row + 1], tmp, k2)
            for k in range(dim):
                k2[k] *= f
                tmp[k] = psi[k] + 0.5 * h * k2[k]
            _apply(energies, lower[row + 1], tmp, k3)
            for k in range(dim):
                k3[k] *= f
                tmp[k] = psi[k] + h * k3[k]
            _apply(energies, lower[row + 2], tmp, k4)
            for k in range(dim):
                k4[k] *= f
                psi[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k])
            row += 2
        out[s] = psi
    return out


def _substeps(cfg: SystemConfig, settings: PropagationSettings) -> int:
    return max(1, int(round(cfg.grid.step / settings.dt)))


def _initial(cfg: SystemConfig, psi0) -> np.ndarray:
    if psi0 is None:
        psi0 = StateVector.basis(cfg.dim)
    elif not isinstance(psi0, StateVector):
        psi0 = StateVector(psi0)
    if psi0.dim != cfg.dim:
        raise InvalidArgumentError(f"initial state has dim {psi0.dim}, system has dim {cfg.dim}")
    return np.array(psi0.amplitudes, dtype=np.complex128)


def _check_step(energies, lower, h):
    # bound on the spectral radius of a tridiagonal matrix (Gershgorin)
    radius = np.max(np.abs(energies)) + 2 * np.max(np.abs(lower)) if lower.size else np.max(np.abs(energies))
    phase = radius * h / HBAR
    if phase > MAX_STEP_PHASE:
        warnings.warn(
            f"integration step {h:.3g} ps accumulates up to {phase:.3f} rad per step; "
            "results may be inaccurate", RuntimeWarning, stacklevel=3)


def _integrate(cfg, psi0, settings, substeps=None) -> np.ndarray:
    grid = cfg.grid
    m = substeps or _substeps(cfg, settings)
    n_steps = grid.n_intervals * m
    h = (grid.t_end - grid.t_start) / n_steps
    half_times = grid.t_start + 0.5 * h * np.arange(2 * n_steps + 1)
    w = coupling(cfg, half_times)
    lower = np.ascontiguousarray(np.repeat(w[:, None], cfg.dim - 1, axis=1), dtype=np.complex128)
    energies = bare_energies(cfg).astype(np.complex128)
    if settings.convergence_check:
        _check_step(energies, lower, h)
    return _rk4_tridiagonal(energies, lower, psi0, h, HBAR, m, len(grid))


def propagate(cfg: SystemConfig, psi0=None, settings: Optional[PropagationSettings] = None,
              substeps: Optional[int] = None) -> Trajectory:
    """Propagate ``psi0`` (default: ground state) over ``cfg.grid``.

    ``substeps`` overrides the number of RK4 steps per grid interval that
    is otherwise derived from ``settings.dt``.  Raises
    :class:`IntegrationError` when the norm drifts by more than
    ``HARD_NORM_LIMIT``; drift beyond ``settings.norm_tolerance`` only warns.
    """
    settings = settings or PropagationSettings()
    states = _integrate(cfg, _initial(cfg, psi0), settings, substeps)
    norms = np.linalg.norm(states, axis=1)
    drift = np.abs(norms - 1.0)
    bad = np.flatnonzero(~(drift <= HARD_NORM_LIMIT))
    if bad.size:
        t_bad = float(cfg.grid.times[bad[0]])
        raise IntegrationError(
            f"norm drifted by {drift[bad[0]]:.3g} at t = {t_bad:.6g} ps; reduce dt", time=t_bad)
    worst = float(drift.max())
    if worst > settings.norm_tolerance:
        warnings.warn(f"norm drift {worst:.3g} exceeds tolerance {settings.norm_tolerance:.3g}",
                      RuntimeWarning, stacklevel=2)
    return Trajectory(cfg.grid, states, norms)


def convergence_report(cfg: SystemConfig, psi0=None, settings: Optional[PropagationSettings] = None) -> float:
    """Max over the grid of ``|psi_dt - psi_dt/2|`` (2-norm)."""
    settings = settings or PropagationSettings()
    m = _substeps(cfg, settings)
    coarse = propagate(cfg, psi0, settings, substeps=m)
    fine = propagate(cfg, psi0, settings, substeps=2 * m)
    return float(np.max(np.linalg.norm(coarse.states - fine.states, axis=1)))
