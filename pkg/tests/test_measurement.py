"""Tests for post-selection, Bell decomposition and the pulse solver."""
import math
import unittest

import numpy as np
import pytest

from qdot_bell.models.params import ModelParams
from qdot_bell.models.states import BlockAmplitudes, PostSelected
from qdot_bell.physics.dynamics import psi_components
from qdot_bell.physics.measurement import (
    bell_decompose,
    bell_fidelity,
    bell_series,
    post_select,
    solve_pulse_length,
)
from qdot_bell.physics.model import dressed_block
from qdot_bell.utils.errors import ValidationError
from tests.helpers import random_pure_state


class TestPostSelect(unittest.TestCase):
    """Test case for photon-number projection."""

    def setUp(self):
        self.state = BlockAmplitudes(n=2, c1=0.6j, c0=0.64, c2=-0.48)

    def test_bell_branch(self):
        selected = post_select(self.state, 3)
        np.testing.assert_allclose(selected.phi, [0.64, 0.0, -0.48])
        self.assertEqual(selected.single_exciton_residual, 0.0)
        self.assertAlmostEqual(selected.success_prob, 0.64)

    def test_single_exciton_branch(self):
        selected = post_select(self.state, 2)
        np.testing.assert_allclose(selected.phi, [0.0, 0.6j, 0.0])
        self.assertAlmostEqual(selected.success_prob, 0.36)

    def test_outcome_outside_sector(self):
        for outcome in (0, 1, 4):
            with self.assertRaises(ValidationError):
                post_select(self.state, outcome)

    def test_zero_state_normalizes_to_zero(self):
        selected = post_select(BlockAmplitudes(n=0, c1=1.0, c0=0j, c2=0j), 1)
        np.testing.assert_allclose(selected.normalized(), np.zeros(3))


def test_success_probability_at_half_beat(resonant):
    """At t = pi/Omega the Bell branch is selected with probability 1/2."""
    block = dressed_block(resonant, 0)
    state = psi_components(resonant, 0, math.pi / block.rabi_frequency)
    assert post_select(state, 1).success_prob == pytest.approx(0.5, abs=1e-12)


def test_branch_probabilities_sum_to_one(detuned):
    for t in np.linspace(0.0, 12.0, 25):
        state = psi_components(detuned, 4, t)
        total = post_select(state, 5).success_prob + post_select(state, 4).success_prob
        assert total == pytest.approx(1.0, abs=1e-12)


def test_resonant_bell_series(resonant):
    """P- stays at 1/2 and P+/P- = cos^2(Omega t / 2) at resonance."""
    times = np.linspace(0.0, 2.0, 41)
    p_plus, p_minus, ratio = bell_series(resonant, 0, times)
    np.testing.assert_allclose(p_minus, 0.5, atol=1e-12)
    np.testing.assert_allclose(p_plus, 0.5 * np.cos(2.0 * times) ** 2, atol=1e-12)
    np.testing.assert_allclose(ratio, np.cos(2.0 * times) ** 2, atol=1e-12)


def test_decomposition_phase_convention(rng):
    for _ in range(20):
        phi = random_pure_state(rng, 3)
        phi[1] = 0.0
        decomposition = bell_decompose(PostSelected(phi=phi, photon_outcome=1))
        assert decomposition.amp_minus.imag == 0.0
        assert decomposition.amp_minus.real >= 0.0
        total = decomposition.p_plus + decomposition.p_minus
        assert total == pytest.approx(float(np.sum(np.abs(phi) ** 2)), abs=1e-12)


def test_ratio_is_infinite_without_minus_component():
    phi = np.array([1.0, 0.0, 1.0]) / math.sqrt(2.0)
    decomposition = bell_decompose(PostSelected(phi=phi, photon_outcome=1))
    assert decomposition.ratio_is_infinite
    assert bell_fidelity(PostSelected(phi=phi, photon_outcome=1), sign=+1) == pytest.approx(1.0)


class TestPulseLength:
    """Test case for pulse-length design."""

    def test_resonant_pulse(self, resonant):
        """T = pi/Omega drains P+ exactly and leaves the minus Bell state."""
        period = dressed_block(resonant, 0).beat_period
        design = solve_pulse_length(resonant, 0, (0.0, 3 * period))
        assert design.pulse_length == pytest.approx(math.pi / 4.0, rel=1e-9)
        assert design.residual_p_plus <= 1e-12
        assert abs(design.paper_condition_residual) <= 1e-9
        assert design.fidelity == pytest.approx(1.0, abs=1e-12)
        assert design.success_prob == pytest.approx(0.5, abs=1e-9)

    def test_detuned_residual(self, detuned):
        """Off resonance the floor is P+ = (sin^2(theta/2) - cos^2(theta/2))^2 / 2."""
        n = 2
        block = dressed_block(detuned, n)
        design = solve_pulse_length(detuned, n, (0.0, 3 * block.beat_period))
        floor = 0.5 * (math.sin(block.theta / 2) ** 2 - math.cos(block.theta / 2) ** 2) ** 2
        assert design.pulse_length == pytest.approx(math.pi / block.rabi_frequency, rel=1e-6)
        assert design.residual_p_plus == pytest.approx(floor, abs=1e-10)
        assert design.fidelity < 1.0

    def test_sector_scaling(self, resonant):
        """T(5) / T(10) = sqrt(11/6) at resonance."""
        designs = [
            solve_pulse_length(resonant, n, (0.0, 3 * dressed_block(resonant, n).beat_period))
            for n in (5, 10)
        ]
        ratio = designs[0].pulse_length / designs[1].pulse_length
        assert ratio == pytest.approx(math.sqrt(11.0 / 6.0), rel=1e-6)

    def test_scale_invariance(self, detuned):
        """Scaling every energy by k scales T by 1/k."""
        k = 3.0
        scaled = detuned.replace(
            drive=k * detuned.drive,
            energy_override=tuple(k * e for e in detuned.energy_override),
        )
        base = solve_pulse_length(detuned, 1, (0.0, 3 * dressed_block(detuned, 1).beat_period))
        fast = solve_pulse_length(scaled, 1, (0.0, 3 * dressed_block(scaled, 1).beat_period))
        assert fast.pulse_length == pytest.approx(base.pulse_length / k, rel=1e-6)
        assert fast.residual_p_plus == pytest.approx(base.residual_p_plus, abs=1e-10)

    @pytest.mark.parametrize(
        "window",
        [(0.0, 2.655), (0.0, 5.7), (0.247, 2.44), (0.45, 3.13), (0.1, 7.93)],
    )
    def test_first_beat_minimum_in_ragged_window(self, resonant, detuned, window):
        """Windows holding a fractional number of beats still return T = pi/Omega."""
        for params, n in ((resonant, 0), (detuned, 2), (resonant, 7)):
            period = dressed_block(params, n).beat_period
            design = solve_pulse_length(params, n, (window[0] * period, window[1] * period))
            assert design.pulse_length == pytest.approx(0.5 * period, rel=1e-6)

    def test_first_beat_minimum_in_random_windows(self, resonant, detuned, rng):
        for params, n in ((resonant, 0), (detuned, 2), (resonant, 7)):
            period = dressed_block(params, n).beat_period
            for _ in range(25):
                start = rng.uniform(0.0, 0.45) * period
                end = start + rng.uniform(2.0, 6.0) * period
                design = solve_pulse_length(params, n, (start, end))
                assert design.pulse_length == pytest.approx(0.5 * period, rel=1e-6)

    def test_short_window_rejected(self, resonant):
        period = dressed_block(resonant, 0).beat_period
        with pytest.raises(ValidationError):
            solve_pulse_length(resonant, 0, (0.0, period))

    def test_no_beat_rejected(self):
        params = ModelParams(drive=0.0, energy_override=(0.0, 0.0, 0.0))
        with pytest.raises(ValidationError):
            solve_pulse_length(params, 0, (0.0, 10.0))
