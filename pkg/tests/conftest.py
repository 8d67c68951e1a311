"""Shared fixtures for the simulator tests."""
import numpy as np
import pytest

from qdot_bell.models.params import ModelParams


@pytest.fixture
def resonant():
    """E0 = E1 = E2 = 0 with A = 1: Omega = 4 sqrt(n+1), theta = pi/2."""
    return ModelParams(omega=1.0, drive=1.0, energy_override=(0.0, 0.0, 0.0), alpha=1.0)


@pytest.fixture
def detuned():
    """E0 = E2 = 0.2, E1 - E0 = 0.7, A = 0.3."""
    return ModelParams(omega=1.0, drive=0.3, energy_override=(0.2, 0.9, 0.2), alpha=1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)

