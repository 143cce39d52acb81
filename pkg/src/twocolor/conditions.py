"""Analytic second-pulse design for the two-level system.

The second pulse must bridge the dressed-state splitting of the first
pulse, ``|Delta_1 - Delta_2| = Omega_R``, and perform a pi rotation between
the dressed states, whose effective coupling is reduced by the squared
mixing coefficient that survives the rotating-wave selection.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import HBAR, InvalidArgumentError
from .dressed import rabi_splitting, tls_dressed


class Branch(str, enum.Enum):
    """Sign of omega_Delta = Delta_1 - Delta_2 used for the dressed transition."""

    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class DesignResult:
    """Second-pulse parameters.

    ``area2`` is in units of pi and is ``None`` when no area condition
    applies (Gaussian first pulse).  ``c_tilde_sq`` refers to the first
    pulse at its plateau or peak.
    """

    delta2: float
    area2: Optional[float]
    omega_delta_sign: Branch
    rabi_splitting: float
    c_tilde_sq: float

    @property
    def energy_difference(self) -> float:
        """hbar*omega_Delta implied by the design."""
        return self.rabi_splitting if self.omega_delta_sign is Branch.POSITIVE else -self.rabi_splitting

    def as_dict(self) -> dict:
        return {
            "delta2_mev": self.delta2,
            "area2_pi": self.area2,
            "omega_delta_sign": self.omega_delta_sign.value,
            "rabi_splitting_mev": self.rabi_splitting,
            "c_tilde_sq": self.c_tilde_sq,
        }


def design_second_pulse(delta1: float, omega1: float, sign=Branch.POSITIVE) -> DesignResult:
    """Detuning and area of the second pulse for a rectangular first pulse.

    ``omega1`` is the plateau value hbar*Omega_1 (meV).  On the positive
    branch the second pulse sits Omega_R below the first and is driven by
    the c_tilde^2-weighted term; on the negative branch it sits Omega_R
    above and the c^2-weighted term is resonant.
    """
    sign = Branch(sign)
    if not omega1 > 0:
        raise InvalidArgumentError(f"first-pulse amplitude must be positive, got {omega1}")
    frame = tls_dressed(omega1, delta1)
    rabi = float(rabi_splitting(omega1, delta1))
    if sign is Branch.POSITIVE:
        delta2 = delta1 - rabi
        weight = frame.c_tilde ** 2
    else:
        delta2 = delta1 + rabi
        weight = frame.c ** 2
    return DesignResult(delta2, 1.0 / weight, sign, rabi, frame.c_tilde ** 2)


def detuning_table(delta1_abs: float, omega1: float) -> dict:
    """Second-pulse detunings for both signs of Delta_1 and omega_Delta.

    Keys are ``(delta1, branch)`` with ``delta1 = -delta1_abs, +delta1_abs``.
    """
    if not delta1_abs > 0 or not omega1 > 0:
        raise InvalidArgumentError("detuning magnitude and amplitude must be positive")
    return {
        (d1, branch): design_second_pulse(d1, omega1, branch).delta2
        for branch in (Branch.POSITIVE, Branch.NEGATIVE)
        for d1 in (-delta1_abs, delta1_abs)
    }


def gaussian_peak(area: float, sigma: float) -> float:
    """Peak hbar*Omega of a Gaussian pulse with ``area`` in units of pi."""
    return HBAR * area * np.pi / (np.sqrt(2 * np.pi) * sigma)


def gaussian_design(area1: float, sigma1: float, delta1: float, sign=Branch.POSITIVE) -> DesignResult:
    """Detuning of the second pulse from the peak splitting of a Gaussian first pulse.

    No area condition applies because the mixing changes continuously, so
    ``area2`` is ``None``.
    """
    sign = Branch(sign)
    if not sigma1 > 0 or area1 < 0:
        raise InvalidArgumentError("need sigma1 > 0 and area1 >= 0")
    peak = gaussian_peak(area1, sigma1)
    rabi = float(rabi_splitting(peak, delta1))
    delta2 = delta1 - rabi if sign is Branch.POSITIVE else delta1 + rabi
    return DesignResult(delta2, None, sign, rabi, tls_dressed(peak, delta1).c_tilde ** 2)
