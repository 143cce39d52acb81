"""Dressed-state simulation and pulse design for two-color excitation of few-level emitters."""
from .core import (
    HBAR,
    HermitianOperator,
    IntegrationError,
    InvalidArgumentError,
    StateVector,
    TimeGrid,
    Trajectory,
    coherence,
    occupation,
)
from .pulses import PulseShape, PulseSpec, TwoColorDrive, envelope, rotating_frame_drive
from .model import SystemConfig, SystemKind, hamiltonian, hamiltonian_3ls, hamiltonian_tls
from .propagator import PropagationSettings, convergence_report, propagate
from .dressed import (
    DressedFrame3LS,
    DressedFrameTLS,
    DressedTrajectory,
    couplings_3ls,
    dressed_3ls,
    dressed_frames_3ls,
    dressed_frame_coupling,
    exciton_decomposition,
    jacobi_eigh,
    project,
    project_3ls,
    project_tls,
    rabi_splitting,
    shifted_energies,
    tls_dressed,
)
from .conditions import (Branch, DesignResult, design_second_pulse, detuning_table, gaussian_design,
                         gaussian_peak)
from .optimizer import OptimizationProblem, OptimizationResult, objective, optimize, scan
from .config import RunConfig
from .presets import PRESETS, preset, scenario

__version__ = "0.1.0"
