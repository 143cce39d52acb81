import numpy as np
import pytest
from hypothesis import given, strategies as st

from twocolor.conditions import (Branch, design_second_pulse, detuning_table, gaussian_design,
                                 gaussian_peak)
from twocolor.core import InvalidArgumentError
from twocolor.dressed import tls_dressed


@pytest.mark.parametrize("d1, branch, d2, area", [
    (-5, Branch.POSITIVE, -11.403, 9.13),
    (5, Branch.POSITIVE, -1.403, 1.12),
])
def test_design_examples(d1, branch, d2, area):
    r = design_second_pulse(d1, 4.0, branch)
    assert r.delta2 == pytest.approx(d2, abs=5e-4)
    assert r.area2 == pytest.approx(area, abs=0.01)
    assert r.rabi_splitting == pytest.approx(np.sqrt(41), abs=1e-14)


def test_negative_branch_example():
    r = design_second_pulse(-5, 4.0, "negative")
    assert r.delta2 == pytest.approx(1.403, abs=5e-4)
    assert r.energy_difference == pytest.approx(-r.rabi_splitting)
    # the resonant term on this branch is weighted by c^2
    assert r.area2 == pytest.approx(1 / tls_dressed(4.0, -5.0).c ** 2)


@given(d1=st.floats(-20, 20), w=st.floats(0.01, 20), branch=st.sampled_from(list(Branch)))
def test_design_invariants(d1, w, branch):
    r = design_second_pulse(d1, w, branch)
    assert abs(d1 - r.delta2) == pytest.approx(r.rabi_splitting, rel=1e-12, abs=1e-12)
    assert (r.delta2 < d1) == (branch is Branch.POSITIVE)
    assert r.area2 >= 1 - 1e-12
    assert r.rabi_splitting >= abs(d1)
    if branch is Branch.POSITIVE:
        assert r.area2 * r.c_tilde_sq == pytest.approx(1, rel=1e-12)


@given(d1=st.floats(-20, 20), w=st.floats(0.01, 20))
def test_branches_mirror_under_sign_flip(d1, w):
    pos = design_second_pulse(d1, w, Branch.POSITIVE)
    neg = design_second_pulse(-d1, w, Branch.NEGATIVE)
    assert neg.delta2 == pytest.approx(-pos.delta2, abs=1e-12)
    assert neg.area2 == pytest.approx(pos.area2, rel=1e-9)


@pytest.mark.parametrize("w", [0.0, -1.0])
def test_design_rejects_nonpositive_amplitude(w):
    with pytest.raises(InvalidArgumentError):
        design_second_pulse(-5, w)


def test_detuning_table_example():
    t = detuning_table(5, 4)
    expected = {(-5, Branch.POSITIVE): -11.40, (5, Branch.POSITIVE): -1.40,
                (-5, Branch.NEGATIVE): 1.40, (5, Branch.NEGATIVE): 11.40}
    for key, value in expected.items():
        assert t[key] == pytest.approx(value, abs=0.005)


@given(d=st.floats(0.01, 20), w=st.floats(0.01, 20))
def test_detuning_table_antisymmetry(d, w):
    t = detuning_table(d, w)
    assert t[(-d, Branch.POSITIVE)] == pytest.approx(-t[(d, Branch.NEGATIVE)], abs=1e-12)
    assert t[(d, Branch.POSITIVE)] == pytest.approx(-t[(-d, Branch.NEGATIVE)], abs=1e-12)


def test_detuning_table_small_detuning_limit():
    t = detuning_table(1e-9, 3.0)
    for (d1, branch), d2 in t.items():
        assert d2 == pytest.approx(-3.0 if branch is Branch.POSITIVE else 3.0, abs=1e-8)


def test_detuning_table_rejects_zero():
    with pytest.raises(InvalidArgumentError):
        detuning_table(0, 4)


def test_gaussian_design_example():
    r = gaussian_design(22.65, 2.4, -8.0)
    assert r.rabi_splitting == pytest.approx(11.163, abs=0.005)
    assert r.delta2 == pytest.approx(-19.163, abs=0.005)
    assert r.area2 is None
    assert r.c_tilde_sq == pytest.approx(0.145, abs=0.005)


def test_gaussian_design_without_pulse():
    assert gaussian_design(0.0, 2.0, -8.0).delta2 == -16.0
    assert gaussian_peak(0.0, 2.0) == 0.0
