"""Pure Jz dephasing: master-equation integration and the small-loss expansion.

The open-system equation is

    d rho / dt = -i [H, rho] - Gamma [Jz, [Jz, rho]]

and its expansion rho = rho(t,0) + Gamma rho_1 + Gamma^2/2 rho_2 + ... obeys

    d rho_1 / dt = -i [H, rho_1] - [Jz, [Jz, rho(t,0)]]
    d rho_2 / dt = -i [H, rho_2] - 2 [Jz, [Jz, rho_1]]

Both Jz and H are taken from a DynamicalSystem, either a single photon sector
(3x3) or the truncated exciton x Fock space.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.integrate import quad_vec, solve_ivp

from qdot_bell.models.density import DensityMatrix, DressedCorrection, MasterTrajectory, PerturbationSeries
from qdot_bell.models.params import ModelParams
from qdot_bell.physics.dynamics import psi_trajectory
from qdot_bell.physics.linalg import ComplexMatrix, commutator, dagger, hermitian_eig, is_hermitian
from qdot_bell.physics.model import (
    block_hamiltonian,
    dressed_block,
    field_jz,
    field_labels,
    full_hamiltonian,
    sector_jz,
    sector_labels,
)
from qdot_bell.utils.errors import IntegrationError, QuadratureError, ValidationError
from qdot_bell.utils.validation import validate_in_set, validate_non_negative, validate_time_grid

logger = logging.getLogger(__name__)

RTOL = 1e-10
ATOL = 1e-12
QUAD_RTOL = 1e-9
QUAD_ATOL = 1e-14
TRACE_DRIFT_LIMIT = 1e-9
POSITIVITY_LIMIT = -1e-8

DensityLike = Union[DensityMatrix, np.ndarray]


@dataclass(frozen=True)
class DynamicalSystem:
    """Hamiltonian, Jz and (exciton, photon) basis labels of the simulated space."""

    hamiltonian: ComplexMatrix = field(repr=False)
    jz: ComplexMatrix = field(repr=False)
    labels: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.hamiltonian.shape != self.jz.shape or len(self.labels) != self.hamiltonian.shape[0]:
            raise ValidationError(
                "hamiltonian, jz and labels must share one dimension",
                field="system",
                value=(self.hamiltonian.shape, self.jz.shape, len(self.labels)),
            )
        if not is_hermitian(self.hamiltonian):
            raise ValidationError("hamiltonian is not Hermitian", field="hamiltonian")
        if np.count_nonzero(self.jz - np.diag(np.diag(self.jz))):
            raise ValidationError("jz must be diagonal in the simulation basis", field="jz")

    @classmethod
    def for_sector(cls, params: ModelParams, n: int) -> "DynamicalSystem":
        """The 3x3 sector |1,n>, |0,n+1>, |2,n+1>; dephasing never leaves it."""
        return cls(block_hamiltonian(params, n), sector_jz(), tuple(sector_labels(n)))

    @classmethod
    def for_field(cls, params: ModelParams, n_max: Optional[int] = None) -> "DynamicalSystem":
        """Exciton x Fock space with photon numbers 0..n_max."""
        n_max = params.resolved_n_max if n_max is None else n_max
        return cls(full_hamiltonian(params, n_max), field_jz(n_max), tuple(field_labels(n_max)))

    @property
    def dim(self) -> int:
        return self.hamiltonian.shape[0]

    @property
    def dephasing_weights(self) -> np.ndarray:
        """(m - m')^2 for every matrix element."""
        m = np.diag(self.jz).real
        return (m[:, None] - m[None, :]) ** 2

    def basis_state(self, exciton: int, photons: int) -> np.ndarray:
        """Unit vector of |exciton, photons>."""
        try:
            index = self.labels.index((exciton, photons))
        except ValueError:
            raise ValidationError(
                f"|{exciton},{photons}> is outside the simulated space",
                field="basis_state",
                value=(exciton, photons),
            )
        vector = np.zeros(self.dim, dtype=np.complex128)
        vector[index] = 1.0
        return vector


def _resolve_system(params: ModelParams, n: Optional[int], system: Optional[DynamicalSystem]) -> DynamicalSystem:
    if system is not None:
        return system
    if n is not None:
        return DynamicalSystem.for_sector(params, n)
    return DynamicalSystem.for_field(params)


def _as_array(rho: DensityLike, dim: int) -> np.ndarray:
    data = rho.data if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=np.complex128)
    if data.shape != (dim, dim):
        raise ValidationError(
            f"density matrix must be {dim}x{dim}", field="rho0", value=data.shape
        )
    return data


def dephasing_term(rho: DensityLike, jz_full: ComplexMatrix) -> ComplexMatrix:
    """[Jz, [Jz, rho]].

    Raises:
        ValidationError: If the dimensions differ
    """
    data = _as_array(rho, jz_full.shape[0])
    return commutator(jz_full, commutator(jz_full, data))


def sector_initial_state() -> DensityMatrix:
    """|0,n+1><0,n+1| in the sector basis (the same matrix for every n)."""
    return DensityMatrix.pure([0.0, 1.0, 0.0])


def integrate_master(
    params: ModelParams,
    rho0: DensityLike,
    t_grid: Sequence[float],
    n: Optional[int] = None,
    system: Optional[DynamicalSystem] = None,
) -> MasterTrajectory:
    """Integrate the dephasing master equation with RK45 (rtol 1e-10, atol 1e-12).

    Integration starts at t=0. Trace drift above 1e-9 and eigenvalues below
    -1e-8 are logged as warnings rather than corrected.

    Args:
        params: Model parameters; ``params.gamma`` is the dephasing rate
        rho0: Initial density matrix at t=0
        t_grid: Non-negative increasing sample times
        n: Sector to simulate; None selects the truncated field space
        system: Explicit dynamical system, overriding ``n``

    Returns:
        MasterTrajectory: Sampled density matrices

    Raises:
        IntegrationError: If the step size underflows
    """
    system = _resolve_system(params, n, system)
    dim = system.dim
    rho_init = _as_array(rho0, dim)
    times = np.asarray(validate_time_grid(t_grid))
    gamma = params.gamma
    hamiltonian = np.asarray(system.hamiltonian)
    weights = system.dephasing_weights

    def rhs(_t: float, y: np.ndarray) -> np.ndarray:
        rho = y.reshape(dim, dim)
        return (-1j * (hamiltonian @ rho - rho @ hamiltonian) - gamma * weights * rho).ravel()

    if times[-1] == 0.0:
        states = np.repeat(rho_init[None], times.size, axis=0)
    else:
        logger.debug("integrating dim=%d over [0, %.6g] with gamma=%.3e", dim, times[-1], gamma)
        result = solve_ivp(
            rhs,
            (0.0, times[-1]),
            rho_init.ravel(),
            method="RK45",
            t_eval=times,
            rtol=RTOL,
            atol=ATOL,
        )
        if result.status != 0:
            reached = float(result.t[-1]) if result.t.size else 0.0
            raise IntegrationError(f"Master equation integration failed: {result.message}", t_reached=reached)
        states = result.y.T.reshape(times.size, dim, dim)

    trajectory = MasterTrajectory(times=times, states=states, gamma=gamma)

    drift = float(np.max(trajectory.trace_errors))
    if drift > TRACE_DRIFT_LIMIT:
        logger.warning("trace drift %.3e exceeds %.0e", drift, TRACE_DRIFT_LIMIT)
    lowest = float(np.min(trajectory.min_eigenvalues()))
    if lowest < POSITIVITY_LIMIT:
        logger.warning("density matrix lost positivity: smallest eigenvalue %.3e", lowest)

    return trajectory


def _quad(func: Callable[[float], np.ndarray], a: float, b: float, shape: Tuple[int, ...]) -> np.ndarray:
    """Adaptive Gauss-Kronrod integral of a complex array-valued function."""
    if b <= a:
        return np.zeros(shape, dtype=np.complex128)

    def stacked(x: float) -> np.ndarray:
        value = func(x)
        return np.concatenate([value.real.ravel(), value.imag.ravel()])

    value, error, info = quad_vec(
        stacked, a, b, epsrel=QUAD_RTOL, epsabs=QUAD_ATOL, norm="max", full_output=True
    )
    if info.status != 0:
        raise QuadratureError(f"Quadrature over [{a:.6g}, {b:.6g}] did not converge", error_estimate=float(error))
    half = value.size // 2
    return (value[:half] + 1j * value[half:]).reshape(shape)


class _EigenFrame:
    """Interaction picture of H: X_I(t) = e^{i w t} * (V^dagger X V), w_ab = lambda_a - lambda_b."""

    def __init__(self, system: DynamicalSystem):
        values, vectors = hermitian_eig(system.hamiltonian)
        self.vectors = np.asarray(vectors)
        self.frequencies = values[:, None] - values[None, :]
        self.jz = dagger(self.vectors) @ system.jz @ self.vectors
        self.shape = system.hamiltonian.shape

    def to_eigen(self, matrix: np.ndarray) -> np.ndarray:
        return dagger(self.vectors) @ matrix @ self.vectors

    def to_lab(self, interaction: np.ndarray, t: float) -> np.ndarray:
        return self.vectors @ (np.exp(-1j * self.frequencies * t) * interaction) @ dagger(self.vectors)

    def source(self, interaction: np.ndarray, tau: float) -> np.ndarray:
        """e^{i w tau} * D(e^{-i w tau} * X) in the eigenbasis."""
        schrodinger = np.exp(-1j * self.frequencies * tau) * interaction
        return np.exp(1j * self.frequencies * tau) * dephasing_term(schrodinger, self.jz)


def perturbative_hierarchy(
    params: ModelParams,
    rho0: DensityLike,
    t_grid: Sequence[float],
    order: int = 1,
    n: Optional[int] = None,
    system: Optional[DynamicalSystem] = None,
) -> PerturbationSeries:
    """rho(t,0), rho_1(t) and rho_2(t) on a time grid.

    rho(t,0) is exact unitary evolution. rho_1 and rho_2 are integrated in the
    interaction picture of H with composite adaptive quadrature over consecutive
    grid intervals (relative tolerance 1e-9); rho_2 nests the rho_1 integral.

    Args:
        params: Model parameters (gamma is not used)
        rho0: Initial density matrix at t=0
        t_grid: Non-negative increasing sample times
        order: Highest order computed, 0, 1 or 2
        n: Sector to simulate; None selects the truncated field space
        system: Explicit dynamical system, overriding ``n``

    Returns:
        PerturbationSeries: The sampled terms

    Raises:
        QuadratureError: If a quadrature does not converge
    """
    validate_in_set(order, {0, 1, 2}, "order")
    system = _resolve_system(params, n, system)
    rho_init = _as_array(rho0, system.dim)
    times = np.asarray(validate_time_grid(t_grid))
    frame = _EigenFrame(system)
    shape = frame.shape

    initial = frame.to_eigen(rho_init)
    rho_zero = np.stack([frame.to_lab(initial, t) for t in times])
    if order == 0:
        return PerturbationSeries(order=0, times=times, rho0=rho_zero)

    def first_source(tau: float) -> np.ndarray:
        return -frame.source(initial, tau)

    first_i: List[np.ndarray] = []
    second_i: List[np.ndarray] = []
    acc1 = np.zeros(shape, dtype=np.complex128)
    acc2 = np.zeros(shape, dtype=np.complex128)
    previous = 0.0
    for t in times:
        if order == 2:
            start, start_value = previous, acc1.copy()

            def second_source(tau: float) -> np.ndarray:
                inner = start_value + _quad(first_source, start, tau, shape)
                return -2.0 * frame.source(inner, tau)

            acc2 = acc2 + _quad(second_source, previous, t, shape)
            second_i.append(acc2)
        acc1 = acc1 + _quad(first_source, previous, t, shape)
        first_i.append(acc1)
        previous = t

    rho1 = np.stack([frame.to_lab(x, t) for x, t in zip(first_i, times)])
    rho2 = None
    if order == 2:
        rho2 = np.stack([frame.to_lab(x, t) for x, t in zip(second_i, times)])
    return PerturbationSeries(order=order, times=times, rho0=rho_zero, rho1=rho1, rho2=rho2)


def first_order_state(series: PerturbationSeries, gamma: float) -> np.ndarray:
    """rho(t,0) + Gamma rho_1(t)."""
    if series.rho1 is None:
        raise ValidationError("series holds no first-order term", field="order", value=series.order)
    return series.rho0 + gamma * series.rho1


def expanded_state(series: PerturbationSeries, gamma: float) -> np.ndarray:
    """The series summed to its highest available order."""
    state = series.rho0.copy()
    if series.rho1 is not None:
        state = state + gamma * series.rho1
    if series.rho2 is not None:
        state = state + 0.5 * gamma ** 2 * series.rho2
    return state


def expectation_expanded(series: PerturbationSeries, gamma: float, observable: ComplexMatrix) -> np.ndarray:
    """Tr(rho(t,0) B) + Gamma Tr(rho_1 B) (+ Gamma^2/2 Tr(rho_2 B)) along the grid.

    Raises:
        ValidationError: If the observable is not Hermitian
    """
    validate_non_negative(gamma, "gamma")
    if not is_hermitian(np.asarray(observable, dtype=np.complex128), 1e-10):
        raise ValidationError("observable must be Hermitian", field="observable")
    values = np.einsum("tij,ji->t", expanded_state(series, gamma), observable)
    imaginary = float(np.max(np.abs(values.imag)))
    if imaginary > 1e-10:
        logger.warning("expanded expectation has imaginary part %.3e", imaginary)
    return values.real


def _selection(system: DynamicalSystem, photon_outcome: int) -> List[Optional[int]]:
    return [
        system.labels.index((i, photon_outcome)) if (i, photon_outcome) in system.labels else None
        for i in range(3)
    ]


def post_selected_output(
    rho_t: DensityLike,
    photon_outcome: int,
    system: DynamicalSystem,
) -> Tuple[np.ndarray, float, float, float]:
    """Exciton state left after measuring ``photon_outcome`` photons.

    Returns:
        Tuple of (rho_e on {|0>, |2>}, P+, P-, residual) where P+- = <B+-|rho_e|B+->
        are unnormalized joint probabilities and residual is the largest |1>
        matrix element surviving the projection
    """
    rho = _as_array(rho_t, system.dim)
    index = _selection(system, photon_outcome)

    def element(i: int, j: int) -> complex:
        if index[i] is None or index[j] is None:
            return 0j
        return complex(rho[index[i], index[j]])

    rho_e = np.array([[element(0, 0), element(0, 2)], [element(2, 0), element(2, 2)]])
    residual = max(abs(element(1, j)) for j in range(3))
    p_plus = 0.5 * float((rho_e[0, 0] + rho_e[1, 1] + 2.0 * rho_e[0, 1].real).real)
    p_minus = 0.5 * float((rho_e[0, 0] + rho_e[1, 1] - 2.0 * rho_e[0, 1].real).real)
    return rho_e, p_plus, p_minus, residual


def bell_populations(states: np.ndarray, photon_outcome: int, system: DynamicalSystem) -> Tuple[np.ndarray, np.ndarray]:
    """P+ and P- of post_selected_output along a stack of density matrices."""
    zero, _, two = _selection(system, photon_outcome)
    if zero is None or two is None:
        empty = np.zeros(len(states))
        return empty, empty.copy()
    diagonal = (states[:, zero, zero] + states[:, two, two]).real
    coherence = 2.0 * states[:, zero, two].real
    return 0.5 * (diagonal + coherence), 0.5 * (diagonal - coherence)


def bell_decay_slope(params: ModelParams, n: int, t_grid: Sequence[float]) -> float:
    """Least-squares slope of P-(t) against Gamma t from the master equation.

    The system starts in |0,n+1> and the Bell branch (n+1 photons) is selected.

    Raises:
        ValidationError: If gamma is zero
    """
    if params.gamma <= 0:
        raise ValidationError("decay slope needs gamma > 0", field="gamma", value=params.gamma)
    system = DynamicalSystem.for_sector(params, n)
    trajectory = integrate_master(params, sector_initial_state(), t_grid, system=system)
    _, p_minus = bell_populations(trajectory.states, n + 1, system)
    slope, _ = np.polyfit(params.gamma * trajectory.times, p_minus, 1)
    return float(slope)


def _dephasing_table(block_coefficients: np.ndarray, amplitudes: np.ndarray) -> np.ndarray:
    """f_{a,b} = <E_a| [Jz, [Jz, |psi><psi|]] |E_b> for sector amplitudes psi."""
    rho = np.outer(amplitudes, np.conj(amplitudes))
    return block_coefficients @ dephasing_term(rho, sector_jz()) @ block_coefficients.T


def _product_tables(b: np.ndarray, amplitudes: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """The two readings of f as products of B coefficients and rho^{0,2}."""
    rho02 = amplitudes[1] * np.conj(amplitudes[2])
    b0, b2 = b[:, 1], b[:, 2]
    printed = 4.0 * np.outer(b0, b0) * rho02 + 4.0 * np.outer(b2, b2) * np.conj(rho02)
    swapped = 4.0 * np.outer(b0, b2) * rho02 + 4.0 * np.outer(b2, b0) * np.conj(rho02)
    return printed, swapped


def rho1_dressed_elements(params: ModelParams, n: int, t: float) -> DressedCorrection:
    """First-order correction of sector n in the dressed basis at time t.

    rho_1^{a,b}(t) = -int_0^t f_{a,b}(tau) exp(-i (E_a - E_b)(t - tau)) dtau for the
    initial state |0,n+1>. The frozen f is the average of f(tau) over two beat
    periods; its closed forms are -f t (a = b) and
    i f / (E_a - E_b) (1 - exp(-i (E_a - E_b) t)) otherwise.

    Raises:
        ValidationError: If E0 != E2 or t < 0
    """
    t = validate_non_negative(t, "t")
    block = dressed_block(params, n)
    b = np.asarray(block.coefficients)
    gaps = block.energies[:, None] - block.energies[None, :]

    def f_tables(tau: float) -> np.ndarray:
        amplitudes = psi_trajectory(params, n, tau)[0]
        printed, swapped = _product_tables(b, amplitudes)
        return np.stack([_dephasing_table(b, amplitudes), printed, swapped])

    def integrand(tau: float) -> np.ndarray:
        return -f_tables(tau) * np.exp(-1j * gaps * (t - tau))

    exact, printed, swapped = _quad(integrand, 0.0, t, (3, 3, 3))

    period = 2.0 * block.beat_period
    if math.isfinite(period):
        frozen_f = _quad(lambda tau: f_tables(tau)[0], 0.0, period, (3, 3)) / period
    else:
        frozen_f = f_tables(0.0)[0]

    closed_form = np.empty((3, 3), dtype=np.complex128)
    for a in range(3):
        for c in range(3):
            gap = gaps[a, c]
            if abs(gap) <= 1e-12 * max(1.0, float(np.max(np.abs(block.energies)))):
                closed_form[a, c] = -frozen_f[a, c] * t
            else:
                closed_form[a, c] = 1j * frozen_f[a, c] / gap * (1.0 - np.exp(-1j * gap * t))

    series = perturbative_hierarchy(params, sector_initial_state(), [t], order=1, n=n)
    numeric = b @ series.rho1[-1] @ b.T

    correction = DressedCorrection(
        n=n,
        t=t,
        frozen_f=frozen_f,
        exact=exact,
        closed_form=closed_form,
        numeric=numeric,
        printed=printed,
        swapped=swapped,
    )
    logger.info(
        "sector n=%d, t=%.6g: numeric residual %.3e, printed-f residual %.3e, swapped-f residual %.3e",
        n, t, correction.numeric_residual, correction.printed_residual, correction.swapped_residual,
    )
    return correction
