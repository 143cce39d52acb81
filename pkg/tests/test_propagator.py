import warnings

import numpy as np
import pytest

from twocolor.core import HBAR, IntegrationError, InvalidArgumentError, StateVector, TimeGrid
from twocolor.model import SystemConfig
from twocolor.presets import PRESETS, scenario
from twocolor.propagator import PropagationSettings, convergence_report, propagate
from twocolor.pulses import PulseSpec, TwoColorDrive


def test_zero_hamiltonian_is_identity():
    cfg = SystemConfig("two_level", TwoColorDrive(PulseSpec.gaussian(0.0, 1.0, 0.0)), TimeGrid(0, 10, 0.1))
    psi0 = StateVector((0.6, 0.8j))
    traj = propagate(cfg, psi0)
    assert np.max(np.abs(traj.states - psi0.amplitudes)) == 0


def test_resonant_rabi_oscillation():
    # flat 1 meV drive over the whole window
    p = PulseSpec.rectangular(1.0, 1e4, 10.0, 0.0)
    cfg = SystemConfig("two_level", TwoColorDrive(p), TimeGrid(0.0, 20.0, 0.01))
    traj = propagate(cfg)
    expected = np.sin(traj.times / HBAR / 2) ** 2
    assert np.max(np.abs(traj.occupation(1) - expected)) < 1e-6


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_norm_conservation(name):
    traj = propagate(scenario(name))
    assert np.max(np.abs(traj.norms - 1)) <= 1e-8


@pytest.mark.parametrize("name", ["fig2", "fig6"])
def test_convergence_report_small(name):
    assert convergence_report(scenario(name)) < 1e-6


@pytest.mark.parametrize("name", ["fig2", "fig3", "fig5", "fig6"])
def test_step_halving_ratio(name):
    cfg = scenario(name)
    s = PropagationSettings(convergence_check=False, norm_tolerance=1e-6)
    psi = {m: propagate(cfg, settings=s, substeps=m).states for m in (2, 4, 8)}
    e1 = np.max(np.linalg.norm(psi[2] - psi[4], axis=1))
    e2 = np.max(np.linalg.norm(psi[4] - psi[8], axis=1))
    assert 12 <= e1 / e2 <= 20


def _flipped(cfg):
    d = cfg.drive
    p1 = PulseSpec(**{**d.pulse1.__dict__, "detuning": -d.pulse1.detuning})
    p2 = None if d.pulse2 is None else PulseSpec(**{**d.pulse2.__dict__, "detuning": -d.pulse2.detuning})
    return SystemConfig(cfg.kind, TwoColorDrive(p1, p2), cfg.grid, cfg.binding_energy)


@pytest.mark.parametrize("name", ["fig2", "fig3", "fig_gauss"])
def test_detuning_sign_flip_symmetry(name):
    cfg = scenario(name)
    a = propagate(cfg).occupations
    b = propagate(_flipped(cfg)).occupations
    assert np.max(np.abs(a - b)) <= 1e-8


def test_sign_flip_without_binding_energy():
    base = scenario("fig5")
    cfg = SystemConfig("biexciton", base.drive, base.grid, 0.0)
    assert np.max(np.abs(propagate(cfg).occupations - propagate(_flipped(cfg)).occupations)) <= 1e-8


def test_coarse_step_raises_with_time():
    cfg = scenario("fig_gauss")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        with pytest.raises(IntegrationError) as info:
            propagate(cfg, settings=PropagationSettings(dt=0.01))
    assert cfg.grid.t_start <= info.value.time <= cfg.grid.t_end


def test_step_phase_warning():
    with pytest.warns(RuntimeWarning):
        try:
            propagate(scenario("fig_gauss"), settings=PropagationSettings(dt=0.01))
        except IntegrationError:
            pass


def test_dimension_mismatch():
    with pytest.raises(InvalidArgumentError):
        propagate(scenario("fig5"), StateVector((1, 0)))


def test_settings_validation():
    with pytest.raises(InvalidArgumentError):
        PropagationSettings(dt=0)
