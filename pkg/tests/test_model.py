import numpy as np
import pytest
from hypothesis import given, strategies as st

from twocolor.conditions import gaussian_peak
from twocolor.core import InvalidArgumentError, TimeGrid
from twocolor.model import (SystemConfig, bare_energies, first_pulse_hamiltonians, hamiltonian,
                            hamiltonian_3ls, hamiltonian_tls)
from twocolor.pulses import PulseSpec, TwoColorDrive, envelope

GRID = TimeGrid(-20.0, 20.0, 0.1)


def tls(p1, p2=None):
    return SystemConfig("two_level", TwoColorDrive(p1, p2), GRID)


def bx(p1, p2=None, binding=4.0):
    return SystemConfig("biexciton", TwoColorDrive(p1, p2), GRID, binding)


def test_tls_no_drive():
    h = hamiltonian_tls(tls(PulseSpec.gaussian(0.0, 3.0, -5.0)), 0.0)
    assert np.array_equal(h.entries, np.diag([0, 5]).astype(complex))


def test_tls_plateau_drive():
    cfg = tls(PulseSpec.rectangular(4.0, 40.0, 1.0, -5.0))
    np.testing.assert_allclose(hamiltonian_tls(cfg, 0.0).entries, [[0, -2], [-2, 5]], atol=1e-8)


def test_3ls_no_drive():
    h = hamiltonian_3ls(bx(PulseSpec.gaussian(0.0, 3.0, -5.0)), 0.0)
    assert np.array_equal(h.entries, np.diag([0, 5, 6]).astype(complex))


def test_3ls_peak():
    cfg = bx(PulseSpec.gaussian(27.0, 3.0, -5.0))
    h = hamiltonian_3ls(cfg, 0.0).entries
    assert gaussian_peak(27.0, 3.0) == pytest.approx(7.425, abs=5e-4)
    assert h[0, 1].real == pytest.approx(-3.7125, abs=5e-4)
    assert h[1, 2] == h[0, 1]
    assert h[0, 2] == 0 and h[2, 0] == 0


def test_wrong_kind():
    with pytest.raises(InvalidArgumentError):
        hamiltonian_3ls(tls(PulseSpec.gaussian(1, 1, 0)), 0.0)
    with pytest.raises(InvalidArgumentError):
        hamiltonian_tls(bx(PulseSpec.gaussian(1, 1, 0)), 0.0)
    with pytest.raises(InvalidArgumentError):
        SystemConfig("biexciton", TwoColorDrive(PulseSpec.gaussian(1, 1, 0)), GRID)
    with pytest.raises(InvalidArgumentError):
        SystemConfig("two_level", TwoColorDrive(PulseSpec.gaussian(1, 1, 0)), GRID, 4.0)


drive_params = dict(
    a1=st.floats(0, 30), a2=st.floats(0, 30), d1=st.floats(-15, 15), d2=st.floats(-15, 15),
    phase=st.floats(-np.pi, np.pi), t=st.floats(-20, 20), kind=st.sampled_from(["two_level", "biexciton"]),
)


@given(**drive_params)
def test_hermitian_and_tridiagonal(a1, a2, d1, d2, phase, t, kind):
    if d1 == d2:
        return
    p1, p2 = PulseSpec.gaussian(a1, 3.0, d1), PulseSpec.gaussian(a2, 4.0, d2, phase=phase)
    cfg = tls(p1, p2) if kind == "two_level" else bx(p1, p2)
    h = hamiltonian(cfg, t).entries
    assert np.array_equal(h, h.conj().T)
    assert np.all(np.triu(h, 2) == 0)


@given(a1=st.floats(0, 30), a2=st.floats(0.1, 30), t=st.floats(-10, 10))
def test_linear_in_envelopes(a1, a2, t):
    p1, p2 = PulseSpec.gaussian(a1, 3.0, -5.0), PulseSpec.gaussian(a2, 4.0, -11.0)
    both = hamiltonian(bx(p1, p2), t).entries
    only1 = hamiltonian(bx(p1), t).entries
    only2 = hamiltonian(bx(PulseSpec.gaussian(0.0, 3.0, -5.0), p2), t).entries
    np.testing.assert_allclose(both, only1 + only2 - np.diag(bare_energies(bx(p1))), atol=1e-12)


def test_first_pulse_hamiltonians_real():
    cfg = bx(PulseSpec.gaussian(27.0, 3.0, -5.0), PulseSpec.gaussian(10.0, 3.0, -11.0))
    t = np.linspace(-5, 5, 7)
    h = first_pulse_hamiltonians(cfg, t)
    assert h.dtype == float and h.shape == (7, 3, 3)
    np.testing.assert_allclose(h[:, 1, 0], -0.5 * envelope(cfg.drive.pulse1, t))
    for i, ti in enumerate(t):
        np.testing.assert_allclose(hamiltonian(cfg, ti, first_pulse_only=True).entries, h[i])
