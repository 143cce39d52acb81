"""CSV and JSON writers.

Numbers are written with 9 significant digits, comma-delimited, with a
header row and ``\\n`` line endings, so identical inputs give identical
bytes.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .core import Trajectory
from .dressed import (DressedFrame3LS, DressedFrameTLS, DressedTrajectory, couplings_3ls,
                      exciton_decomposition, shifted_energies)
from .model import SystemConfig, SystemKind
from .pulses import envelope

TRAJECTORY_COLUMNS = ["t_ps", "occ_g", "occ_x", "occ_xx", "norm", "env1_mev", "env2_mev"]
DRESSED_TLS_COLUMNS = ["t_ps", "e_plus_mev", "e_minus_mev", "e_plus2_mev", "e_minus2_mev",
                       "occ_psi_plus", "occ_psi_minus", "pop_contribution", "coh_contribution"]
DRESSED_3LS_COLUMNS = ["t_ps", "e1_mev", "e2_mev", "e3_mev", "occ_psi1", "occ_psi2", "occ_psi3",
                       "omega12", "omega13", "omega23"]
TRACE_COLUMNS = ["detuning_mev", "area_pi", "objective"]


def fmt(x) -> str:
    return f"{float(x):.9g}"


def write_csv(path, columns, rows) -> Path:
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([fmt(v) for v in row])
    return path


def trajectory_table(traj: Trajectory, cfg: SystemConfig) -> np.ndarray:
    t = traj.times
    occ = traj.occupations
    occ_xx = occ[:, 2] if traj.dim == 3 else np.zeros_like(t)
    env1 = envelope(cfg.drive.pulse1, t)
    env2 = envelope(cfg.drive.pulse2, t) if cfg.drive.pulse2 is not None else np.zeros_like(t)
    return np.column_stack([t, occ[:, 0], occ[:, 1], occ_xx, traj.norms, env1, env2])


def dressed_table(dtraj: DressedTrajectory, cfg: SystemConfig) -> tuple:
    """Returns ``(columns, table)`` matching the system kind."""
    t = dtraj.times
    occ = dtraj.occupations
    if cfg.kind is SystemKind.TWO_LEVEL:
        c, ct = dtraj.mixing.T
        e_minus, e_plus = dtraj.energies.T
        omega2 = envelope(cfg.drive.pulse2, t) if cfg.drive.pulse2 is not None else np.zeros_like(t)
        # frame fields broadcast over time
        frame = DressedFrameTLS(e_plus, e_minus, c, ct)
        e_plus2, e_minus2 = shifted_energies(frame, omega2, cfg.drive.energy_difference, t)
        pop, coh = exciton_decomposition(dtraj)
        table = np.column_stack([t, e_plus, e_minus, e_plus2, e_minus2,
                                 occ[:, 1], occ[:, 0], pop, coh])
        return DRESSED_TLS_COLUMNS, table
    o12, o13, o23 = couplings_3ls(DressedFrame3LS(dtraj.energies, dtraj.coefficients))
    table = np.column_stack([t, dtraj.energies, occ, o12, o13, o23])
    return DRESSED_3LS_COLUMNS, table


def write_trajectory(path, traj: Trajectory, cfg: SystemConfig) -> Path:
    return write_csv(path, TRAJECTORY_COLUMNS, trajectory_table(traj, cfg))


def write_dressed(path, dtraj: DressedTrajectory, cfg: SystemConfig) -> Path:
    columns, table = dressed_table(dtraj, cfg)
    return write_csv(path, columns, table)


def write_trace(path, trace) -> Path:
    return write_csv(path, TRACE_COLUMNS, trace)


def write_json(path, data) -> Path:
    path = Path(path)
    path.write_text(json.dumps(data, indent=2, sort_keys=False) + "\n", encoding="utf-8")
    return path
