"""Exciton-photon Hamiltonians and the dressed eigensystem of each photon sector.

Exciton states |0>, |1>, |2> are the J=1 states M = -1, 0, +1 (vacuum, single
exciton, biexciton). Sector n couples |1,n> to |0,n+1> and |2,n+1>; its basis is
always taken in that order.
"""
import math
from typing import List, Tuple

import numpy as np
from scipy.stats import poisson

from qdot_bell.models.dressed import DressedBlock
from qdot_bell.models.params import ModelParams
from qdot_bell.physics.linalg import (
    ComplexMatrix,
    angular_momentum_ops,
    basis_projector,
    dagger,
    fock_ops,
    tensor_product,
)
from qdot_bell.utils.errors import ValidationError
from qdot_bell.utils.validation import validate_non_negative_int


SQRT2 = math.sqrt(2.0)

# Exciton label of each sector basis slot, and its Jz eigenvalue.
SECTOR_EXCITONS = (1, 0, 2)
SECTOR_JZ = (0.0, -1.0, 1.0)

REGIME_RTOL = 1e-9


def energies(params: ModelParams) -> Tuple[float, float, float]:
    """Bare level energies (E0, E1, E2).

    Without an override: E0 = W - e + w/2, E1 = 2W - w/2, E2 = W + e + w/2.
    """
    if params.energy_override is not None:
        return params.energy_override
    e, w, omega = params.band_gap, params.interdot, params.omega
    return (w - e + 0.5 * omega, 2.0 * w - 0.5 * omega, w + e + 0.5 * omega)


def sector_coupling(params: ModelParams, n: int) -> float:
    """Omega_1 = sqrt(2(n+1)) A."""
    return math.sqrt(2.0 * (n + 1)) * params.drive


def rabi_frequency(params: ModelParams, n) -> np.ndarray:
    """Omega = sqrt(8 Omega_1^2 + (E1 - E0)^2); accepts scalar or array n."""
    e0, e1, _ = energies(params)
    n = np.asarray(n, dtype=float)
    return np.sqrt(16.0 * (n + 1.0) * params.drive ** 2 + (e1 - e0) ** 2)


def block_hamiltonian(params: ModelParams, n: int) -> ComplexMatrix:
    """3x3 Hamiltonian of sector n in the basis |1,n>, |0,n+1>, |2,n+1>."""
    validate_non_negative_int(n, "n")
    e0, e1, e2 = energies(params)
    omega1 = sector_coupling(params, n)
    block = np.array(
        [
            [e1, omega1, omega1],
            [omega1, e0, 0.0],
            [omega1, 0.0, e2],
        ],
        dtype=np.complex128,
    )
    block.setflags(write=False)
    return block


def check_dark_regime(params: ModelParams, n: int = 0) -> None:
    """Raise unless E0 = E2 to within REGIME_RTOL of the sector's energy scale."""
    e0, _, e2 = energies(params)
    scale = max(abs(e0), abs(e2), float(rabi_frequency(params, n)))
    if abs(e0 - e2) > REGIME_RTOL * scale:
        raise ValidationError(
            f"dark-state analysis needs E0 = E2 (got E0={e0:.6g}, E2={e2:.6g})",
            field="energy_override",
            value=(e0, e2),
        )


def dressed_block(params: ModelParams, n: int) -> DressedBlock:
    """Closed-form dressed eigensystem of sector n in the E0 = E2 regime.

    Raises:
        ValidationError: If E0 and E2 differ beyond tolerance
    """
    validate_non_negative_int(n, "n")
    check_dark_regime(params, n)

    e0, e1, _ = energies(params)
    omega1 = sector_coupling(params, n)
    detuning = e1 - e0
    rabi = float(rabi_frequency(params, n))
    theta = math.atan2(2.0 * SQRT2 * omega1, detuning)

    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    r = SQRT2 / 2.0
    coefficients = np.array(
        [
            [0.0, r, -r],
            [c, r * s, r * s],
            [s, -r * c, -r * c],
        ]
    )
    coefficients.setflags(write=False)

    return DressedBlock(
        n=n,
        omega1=omega1,
        rabi_frequency=rabi,
        theta=theta,
        e_dark=e0,
        e_plus=e0 + 0.5 * (detuning + rabi),
        e_minus=e0 + 0.5 * (detuning - rabi),
        coefficients=coefficients,
    )


def full_hamiltonian(params: ModelParams, n_max: int = None) -> ComplexMatrix:
    """Hamiltonian on the exciton x truncated-Fock space, exciton index slow.

    H = sum_i E_i |i><i| x I + sqrt(2) A (|1><0| + |1><2|) x a + h.c.
    """
    n_max = params.resolved_n_max if n_max is None else n_max
    if n_max < 1:
        raise ValidationError("n_max must be at least 1", field="n_max", value=n_max)

    jp, jm, _ = angular_momentum_ops(1)
    projectors = [basis_projector(3, i) for i in range(3)]
    a, _ = fock_ops(n_max)
    identity = np.eye(n_max + 1)

    bare = sum(
        level * tensor_product(projectors[i], identity)
        for i, level in enumerate(energies(params))
    )
    # J+ |0> and J- |2> both land on |1> with weight sqrt(2)
    lowering_to_single = (jp @ projectors[0] + jm @ projectors[2]) / SQRT2
    coupling = SQRT2 * params.drive * tensor_product(lowering_to_single, a)

    hamiltonian = bare + coupling + dagger(coupling)
    hamiltonian.setflags(write=False)
    return hamiltonian


def field_jz(n_max: int) -> ComplexMatrix:
    """Jz x I on the exciton x truncated-Fock space."""
    _, _, jz = angular_momentum_ops(1)
    return tensor_product(jz, np.eye(n_max + 1))


def sector_jz() -> ComplexMatrix:
    """Jz restricted to one sector, in sector basis order."""
    jz = np.diag(SECTOR_JZ).astype(np.complex128)
    jz.setflags(write=False)
    return jz


def field_labels(n_max: int) -> List[Tuple[int, int]]:
    """(exciton, photon) label of every full-space basis index."""
    return [(i, n) for i in range(3) for n in range(n_max + 1)]


def sector_labels(n: int) -> List[Tuple[int, int]]:
    """(exciton, photon) label of every sector basis index."""
    return [(1, n), (0, n + 1), (2, n + 1)]


def sector_indices(n: int, n_max: int) -> List[int]:
    """Full-space indices of |1,n>, |0,n+1>, |2,n+1>."""
    if n + 1 > n_max:
        raise ValidationError(
            f"sector {n} needs photon number {n + 1} but n_max is {n_max}",
            field="n",
            value=n,
        )
    stride = n_max + 1
    return [1 * stride + n, 0 * stride + n + 1, 2 * stride + n + 1]


def poisson_weights(alpha: float, n_max: int) -> np.ndarray:
    """P(m) = exp(-alpha^2) alpha^(2m) / m! for m = 0..n_max."""
    if alpha == 0:
        weights = np.zeros(n_max + 1)
        weights[0] = 1.0
        return weights
    return poisson.pmf(np.arange(n_max + 1), alpha ** 2)


def tail_mass(alpha: float, n_max: int) -> float:
    """Poisson probability beyond the truncation, sum_{m > n_max} P(m)."""
    if alpha == 0:
        return 0.0
    return float(poisson.sf(n_max, alpha ** 2))
