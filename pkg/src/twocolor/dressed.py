"""Dressed-state analysis.

Two-level frames are analytic.  Three-level frames come from a cyclic
Jacobi diagonalization of the real rotating-frame Hamiltonian of the
first pulse, with eigenvector signs tracked along the time axis.

Dressed states are always indexed by ascending energy.  For the two-level
system index 0 is psi_minus and index 1 is psi_plus, with

    psi_plus  = c |x> - c_tilde |g>
    psi_minus = c_tilde |x> + c |g>
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import HBAR, HermitianOperator, InvalidArgumentError, Trajectory
from .model import SystemConfig, SystemKind, first_pulse_hamiltonians
from .pulses import envelope

JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 50


@dataclass(frozen=True)
class DressedFrameTLS:
    e_plus: float
    e_minus: float
    c: float
    c_tilde: float

    @property
    def coefficients(self) -> np.ndarray:
        """Rows psi_minus, psi_plus in the (g, x) basis."""
        return np.array([[self.c, self.c_tilde], [-self.c_tilde, self.c]])


@dataclass(frozen=True, eq=False)
class DressedFrame3LS:
    """Ascending energies and coefficient rows ``a[j, k]`` (dressed j, bare k)."""

    energies: np.ndarray
    coefficients: np.ndarray


@dataclass(frozen=True, eq=False)
class DressedTrajectory:
    """Dressed-basis view of a trajectory.

    ``amplitudes[i, j]`` is the projection of the state at ``times[i]`` on
    dressed state ``j`` (ascending energy).  ``mixing`` holds ``(c, c_tilde)``
    per time for two-level trajectories and is ``None`` otherwise.
    """

    times: np.ndarray
    energies: np.ndarray
    coefficients: np.ndarray
    amplitudes: np.ndarray
    bare_states: np.ndarray
    mixing: Optional[np.ndarray] = None

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[1]

    @property
    def occupations(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def coherence(self, j: int, k: int) -> np.ndarray:
        """Expectation of |psi_j><psi_k|, i.e. ``conj(b_j) * b_k``."""
        if j == k:
            raise InvalidArgumentError("coherence needs two distinct dressed states")
        return np.conj(self.amplitudes[:, j]) * self.amplitudes[:, k]

    def frame(self, i: int) -> DressedFrame3LS:
        return DressedFrame3LS(self.energies[i], self.coefficients[i])


# ---------------------------------------------------------------- two-level

def rabi_splitting(omega0, delta):
    """Generalized Rabi energy sqrt(omega0^2 + delta^2) in meV."""
    return np.hypot(omega0, delta)


def _mixing(omega0, delta):
    omega0 = np.asarray(omega0, dtype=float)
    delta = np.asarray(delta, dtype=float)
    rabi = np.hypot(omega0, delta)
    with np.errstate(invalid="ignore", divide="ignore"):
        # unit-splitting variables keep subnormal inputs well conditioned
        w, d = omega0 / rabi, delta / rabi
        r = np.hypot(w, d)
        # cancellation-free branches of c = (R - d) / sqrt(w^2 + (R - d)^2)
        u = r - d
        n_neg = np.hypot(w, u)
        v = r + d
        n_pos = np.hypot(w, v)
        c = np.where(d <= 0, u / n_neg, w / n_pos)
        ct = np.where(d <= 0, w / n_neg, v / n_pos)
    degenerate = rabi == 0
    c = np.where(degenerate, 0.0, c)
    ct = np.where(degenerate, 1.0, ct)
    return rabi, c, ct


def tls_dressed(omega0: float, delta: float) -> DressedFrameTLS:
    """Dressed energies and mixing coefficients of H_0 + H_Omega1.

    ``omega0`` is the envelope hbar*Omega_0 and ``delta`` the detuning
    hbar*Delta, both in meV.  For omega0 = delta = 0 the convention
    c = 0, c_tilde = 1 is used.
    """
    rabi, c, ct = _mixing(omega0, delta)
    return DressedFrameTLS(
        e_plus=float(0.5 * (-delta + rabi)),
        e_minus=float(0.5 * (-delta - rabi)),
        c=float(c),
        c_tilde=float(ct),
    )


def shifted_energies(frame: DressedFrameTLS, omega2_envelope, omega_delta, t):
    """Dressed energies including the diagonal part of the second pulse.

    ``omega_delta`` is the energy hbar*omega_Delta in meV.  Vectorized over
    ``omega2_envelope`` and ``t``.
    """
    shift = omega2_envelope * frame.c * frame.c_tilde * np.cos(omega_delta / HBAR * np.asarray(t))
    return frame.e_plus + shift, frame.e_minus - shift


def dressed_frame_coupling(frame: DressedFrameTLS, omega2_envelope, omega_delta, t):
    """Coefficient of |psi_plus><psi_minus| generated by the second pulse (meV)."""
    phase = omega_delta / HBAR * np.asarray(t)
    return -0.5 * omega2_envelope * (frame.c ** 2 * np.exp(1j * phase)
                                     - frame.c_tilde ** 2 * np.exp(-1j * phase))


def _check_projection(traj: Trajectory, cfg: SystemConfig, kind: SystemKind):
    if cfg.kind is not kind:
        raise InvalidArgumentError(f"expected a {kind.value} configuration, got {cfg.kind.value}")
    if traj.dim != cfg.dim:
        raise InvalidArgumentError(f"trajectory has dim {traj.dim}, configuration has dim {cfg.dim}")


def project_tls(traj: Trajectory, cfg: SystemConfig) -> DressedTrajectory:
    """Rotate a two-level trajectory into the dressed frame of the first pulse."""
    _check_projection(traj, cfg, SystemKind.TWO_LEVEL)
    t = traj.times
    omega0 = envelope(cfg.drive.pulse1, t)
    delta = cfg.drive.pulse1.detuning
    rabi, c, ct = _mixing(omega0, np.full_like(omega0, delta))
    energies = np.stack([0.5 * (-delta - rabi), 0.5 * (-delta + rabi)], axis=1)
    coeffs = np.empty((t.size, 2, 2))
    coeffs[:, 0, 0], coeffs[:, 0, 1] = c, ct
    coeffs[:, 1, 0], coeffs[:, 1, 1] = -ct, c
    amps = np.einsum("njk,nk->nj", coeffs, traj.states)
    return DressedTrajectory(t, energies, coeffs, amps, np.asarray(traj.states),
                             mixing=np.stack([c, ct], axis=1))


def exciton_decomposition(dtraj: DressedTrajectory):
    """Split the exciton occupation into dressed population and coherence parts.

    Returns ``(population_part, coherence_part)``; their sum is |<x|psi>|^2.
    """
    if dtraj.mixing is None:
        raise InvalidArgumentError("decomposition needs a two-level dressed trajectory")
    c, ct = dtraj.mixing.T
    occ = dtraj.occupations
    population = c ** 2 * occ[:, 1] + ct ** 2 * occ[:, 0]
    coh = 2 * c * ct * np.real(dtraj.coherence(1, 0))
    return population, coh


# ---------------------------------------------------------------- three-level

def jacobi_eigh(a, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigen-decompose real symmetric matrices with cyclic Jacobi rotations.

    ``a`` has shape ``(..., n, n)``; the batch is rotated in lockstep.
    Returns ascending eigenvalues ``(..., n)`` and eigenvectors as columns
    ``(..., n, n)``.  Converged when the off-diagonal Frobenius norm drops
    below ``tol * ||a||`` for every matrix.
    """
    a = np.array(a, dtype=float)
    if a.shape[-1] != a.shape[-2]:
        raise InvalidArgumentError("matrices must be square")
    if not np.array_equal(a, np.swapaxes(a, -1, -2)):
        raise InvalidArgumentError("matrices must be symmetric")
    batch = a.shape[:-2]
    n = a.shape[-1]
    a = a.reshape((-1, n, n))
    v = np.broadcast_to(np.eye(n), a.shape).copy()
    scale = np.linalg.norm(a, axis=(1, 2))
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(a[:, off_mask] ** 2, axis=1))
        if np.all(off <= tol * scale):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                active = apq != 0
                if not np.any(active):
                    continue
                # a tiny apq overflows theta to inf, which gives the correct zero rotation
                with np.errstate(over="ignore"):
                    theta = np.where(active, (a[:, q, q] - a[:, p, p]) / (2 * np.where(active, apq, 1)), 0)
                t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
                t = np.where(theta == 0, 1.0, t)
                t = np.where(active, t, 0.0)
                cs = 1 / np.sqrt(t ** 2 + 1)
                sn = t * cs
                # a <- J^T a J, v <- v J with J the (p, q) Givens rotation
                ap, aq = a[:, :, p].copy(), a[:, :, q].copy()
                a[:, :, p] = cs[:, None] * ap - sn[:, None] * aq
                a[:, :, q] = sn[:, None] * ap + cs[:, None] * aq
                ap, aq = a[:, p, :].copy(), a[:, q, :].copy()
                a[:, p, :] = cs[:, None] * ap - sn[:, None] * aq
                a[:, q, :] = sn[:, None] * ap + cs[:, None] * aq
                a[:, p, q] = a[:, q, p] = 0.0
                vp, vq = v[:, :, p].copy(), v[:, :, q].copy()
                v[:, :, p] = cs[:, None] * vp - sn[:, None] * vq
                v[:, :, q] = sn[:, None] * vp + cs[:, None] * vq
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    w = np.diagonal(a, axis1=1, axis2=2)
    order = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    v = np.take_along_axis(v, order[:, None, :], axis=2)
    return w.reshape(batch + (n,)), v.reshape(batch + (n, n))


def _fix_signs(rows, previous=None):
    """Flip rows of ``rows`` (n_times, n, n) so successive same-index rows overlap positively."""
    rows = rows.copy()
    if previous is None:
        idx = np.argmax(np.abs(rows[0]), axis=1)
        ref = np.sign(rows[0, np.arange(rows.shape[1]), idx])
    else:
        ref = np.sign(np.einsum("jk,jk->j", rows[0], previous))
    ref = np.where(ref == 0, 1.0, ref)
    flips = np.sign(np.einsum("njk,njk->nj", rows[1:], rows[:-1]))
    flips = np.where(flips == 0, 1.0, flips)
    signs = np.cumprod(np.vstack([ref[None, :], flips]), axis=0)
    return rows * signs[:, :, None]


def dressed_3ls(h, previous: Optional[DressedFrame3LS] = None) -> DressedFrame3LS:
    """Dressed frame of a real 3x3 Hamiltonian.

    Eigenvector signs follow ``previous`` when given (positive overlap);
    otherwise the largest-magnitude component of each row is positive.
    """
    m = h.entries if isinstance(h, HermitianOperator) else np.asarray(h)
    if m.shape != (3, 3):
        raise InvalidArgumentError(f"expected a 3x3 operator, got shape {m.shape}")
    if not np.array_equal(m, np.conj(m).T):
        raise InvalidArgumentError("operator is not Hermitian")
    if np.iscomplexobj(m) and np.any(m.imag):
        raise InvalidArgumentError("dressed frame needs a real Hamiltonian (first pulse only)")
    w, v = jacobi_eigh(np.real(m))
    rows = _fix_signs(v.T[None], None if previous is None else previous.coefficients)[0]
    return DressedFrame3LS(w, rows)


def dressed_frames_3ls(cfg: SystemConfig, times) -> tuple:
    """Continuity-tracked frames of the first pulse along ``times``.

    Returns ``(energies (n, 3), coefficients (n, 3, 3))``.
    """
    if cfg.kind is not SystemKind.BIEXCITON:
        raise InvalidArgumentError("three-level frames need a biexciton configuration")
    h = first_pulse_hamiltonians(cfg, times)
    w, v = jacobi_eigh(h)
    return w, _fix_signs(np.swapaxes(v, 1, 2))


def couplings_3ls(frame: DressedFrame3LS):
    """Mixing factors (Omega12, Omega13, Omega23) of the second-pulse couplings.

    Vectorized: ``frame.coefficients`` may carry leading time axes.
    """
    a = np.asarray(frame.coefficients)
    g, x, xx = 0, 1, 2

    def pair(j, k):
        return a[..., j, g] * a[..., k, x] + a[..., j, x] * a[..., k, xx]

    o12, o13, o23 = pair(1, 0), pair(2, 0), pair(2, 1)
    if a.ndim == 2:
        return float(o12), float(o13), float(o23)
    return o12, o13, o23


def project_3ls(traj: Trajectory, cfg: SystemConfig) -> DressedTrajectory:
    """Project a biexciton trajectory on the tracked dressed frame of the first pulse."""
    _check_projection(traj, cfg, SystemKind.BIEXCITON)
    energies, coeffs = dressed_frames_3ls(cfg, traj.times)
    amps = np.einsum("njk,nk->nj", coeffs, traj.states)
    return DressedTrajectory(traj.times, energies, coeffs, amps, np.asarray(traj.states))


def project(traj: Trajectory, cfg: SystemConfig) -> DressedTrajectory:
    if cfg.kind is SystemKind.TWO_LEVEL:
        return project_tls(traj, cfg)
    return project_3ls(traj, cfg)
