"""Tests for the Hamiltonians and the dressed eigensystem."""
import math
import unittest

import numpy as np
import pytest

from qdot_bell.models.dressed import DRESSED_LABELS
from qdot_bell.models.params import ModelParams, coherent_truncation
from qdot_bell.physics.linalg import is_hermitian
from qdot_bell.physics.model import (
    block_hamiltonian,
    check_dark_regime,
    dressed_block,
    energies,
    field_labels,
    full_hamiltonian,
    poisson_weights,
    rabi_frequency,
    sector_coupling,
    sector_indices,
    tail_mass,
)
from qdot_bell.utils.errors import ValidationError


class TestModelParams(unittest.TestCase):
    """Test case for the ModelParams model."""

    def test_bare_energies(self):
        """E0 = W - e + w/2, E1 = 2W - w/2, E2 = W + e + w/2."""
        params = ModelParams(band_gap=0.2, interdot=0.1, omega=1.0)
        np.testing.assert_allclose(energies(params), (0.4, -0.3, 0.8))

    def test_override_wins(self):
        params = ModelParams(energy_override=(1, 2, 1))
        self.assertEqual(energies(params), (1.0, 2.0, 1.0))

    def test_normalized_scales_by_omega(self):
        params = ModelParams(interdot=1e14, omega=1e15, drive=4e13, gamma=4e10).normalized()
        self.assertEqual(params.omega, 1.0)
        self.assertAlmostEqual(params.interdot, 0.1)
        self.assertAlmostEqual(params.drive, 0.04)
        self.assertAlmostEqual(params.gamma, 4e-5)

    def test_invalid_values(self):
        with self.assertRaises(ValidationError):
            ModelParams(omega=0.0)
        with self.assertRaises(ValidationError):
            ModelParams(gamma=-1.0)
        with self.assertRaises(ValidationError):
            ModelParams(drive=-0.1)
        with self.assertRaises(ValidationError):
            ModelParams(energy_override=(0.0, 1.0))

    def test_truncation_rule(self):
        self.assertEqual(coherent_truncation(5.0), 75)
        self.assertEqual(ModelParams(alpha=5.0).resolved_n_max, 75)
        self.assertEqual(ModelParams(alpha=5.0, n_max=12).resolved_n_max, 12)

    def test_dict_round_trip(self):
        params = ModelParams(drive=0.3, energy_override=(0.1, 0.2, 0.1), n_max=7)
        self.assertEqual(ModelParams.from_dict(params.to_dict()), params)


def test_block_hamiltonian_structure(detuned):
    h = block_hamiltonian(detuned, 3)
    omega1 = math.sqrt(8.0) * 0.3
    assert is_hermitian(h)
    np.testing.assert_allclose(h.diagonal().real, [0.9, 0.2, 0.2])
    assert h[0, 1] == pytest.approx(omega1)
    assert h[0, 2] == pytest.approx(omega1)
    assert h[1, 2] == 0
    assert sector_coupling(detuned, 3) == pytest.approx(omega1)


def test_dressed_closed_form_matches_diagonalization(rng):
    """Closed-form energies and eigenvectors agree with numerical diagonalization."""
    for _ in range(200):
        drive = rng.uniform(0.01, 1.0)
        detuning = rng.uniform(-5.0, 5.0)
        e0 = rng.uniform(-1.0, 1.0)
        n = int(rng.integers(0, 61))
        params = ModelParams(drive=drive, energy_override=(e0, e0 + detuning, e0))

        block = dressed_block(params, n)
        h = block_hamiltonian(params, n)
        numeric = np.linalg.eigvalsh(h)
        scale = max(1.0, float(np.max(np.abs(numeric))))

        np.testing.assert_allclose(np.sort(block.energies), numeric, rtol=0, atol=1e-10 * scale)
        for label, energy in zip(DRESSED_LABELS, block.energies):
            row = block.row(label)
            np.testing.assert_allclose(h @ row, energy * row, atol=1e-10 * scale)
            assert np.linalg.norm(row) == pytest.approx(1.0, abs=1e-12)
        assert abs(block.coefficient("d", 1)) <= 1e-12
        assert 0.0 < block.theta < math.pi


def test_resonance_values(resonant):
    """theta = pi/2 and Omega = 4 A sqrt(n+1) at resonance."""
    block = dressed_block(resonant, 0)
    assert block.theta == pytest.approx(math.pi / 2)
    assert block.rabi_frequency == pytest.approx(4.0)
    assert block.e_plus == pytest.approx(2.0)
    assert block.e_minus == pytest.approx(-2.0)
    assert block.beat_period == pytest.approx(math.pi / 2)
    np.testing.assert_allclose(rabi_frequency(resonant, np.arange(4)), 4.0 * np.sqrt(np.arange(1, 5)))


def test_no_drive_gives_zero_angle():
    params = ModelParams(drive=0.0, energy_override=(0.0, 0.0, 0.0))
    block = dressed_block(params, 2)
    assert block.theta == 0.0
    assert math.isinf(block.beat_period)


def test_dark_regime_required():
    params = ModelParams(band_gap=0.2)
    with pytest.raises(ValidationError):
        check_dark_regime(params)
    with pytest.raises(ValidationError):
        dressed_block(params, 0)


def test_full_hamiltonian_embeds_sectors(detuned):
    """Every sector block sits inside the exciton x Fock Hamiltonian."""
    n_max = 6
    h = full_hamiltonian(detuned, n_max)
    assert h.shape == (3 * (n_max + 1), 3 * (n_max + 1))
    assert is_hermitian(h)
    for n in range(n_max):
        idx = sector_indices(n, n_max)
        np.testing.assert_allclose(h[np.ix_(idx, idx)], block_hamiltonian(detuned, n), atol=1e-14)
    labels = field_labels(n_max)
    assert labels[sector_indices(2, n_max)[1]] == (0, 3)


def test_full_hamiltonian_couples_nothing_else(detuned):
    """Outside the sector blocks only uncoupled diagonal energies remain."""
    n_max = 4
    h = np.array(full_hamiltonian(detuned, n_max))
    for n in range(n_max):
        idx = sector_indices(n, n_max)
        h[np.ix_(idx, idx)] = 0
    covered = {i for n in range(n_max) for i in sector_indices(n, n_max)}
    for i in set(range(h.shape[0])) - covered:
        h[i, i] = 0
    assert np.max(np.abs(h)) == 0


def test_sector_indices_bounds():
    with pytest.raises(ValidationError):
        sector_indices(5, 5)


def test_poisson_weights_and_tail():
    weights = poisson_weights(5.0, 75)
    assert weights.sum() + tail_mass(5.0, 75) == pytest.approx(1.0, abs=1e-12)
    assert tail_mass(5.0, 75) < 1e-10
    np.testing.assert_allclose(poisson_weights(0.0, 3), [1.0, 0.0, 0.0, 0.0])
