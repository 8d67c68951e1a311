"""Closed-system evolution of the sectors and coherent-field averaged observables."""
import logging
import math
from typing import Optional, Tuple, Union

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from qdot_bell.models.dressed import DressedBlock
from qdot_bell.models.params import ModelParams
from qdot_bell.models.states import BlockAmplitudes, CollapseMetrics, JointState
from qdot_bell.physics.model import (
    check_dark_regime,
    dressed_block,
    energies,
    poisson_weights,
    rabi_frequency,
    tail_mass,
)
from qdot_bell.utils.errors import ValidationError
from qdot_bell.utils.validation import validate_non_negative

logger = logging.getLogger(__name__)

TAIL_WARNING_THRESHOLD = 1e-8
SAMPLES_PER_PERIOD = 40

Times = Union[float, np.ndarray]


def _sector_trajectory(block: DressedBlock, c_init: np.ndarray, times: np.ndarray) -> np.ndarray:
    basis = block.coefficients
    overlaps = basis @ c_init
    phases = np.exp(-1j * np.outer(times, block.energies))
    return (phases * overlaps) @ basis


def evolve_block(block: DressedBlock, c_init: BlockAmplitudes, t: float) -> BlockAmplitudes:
    """Propagate sector amplitudes: c(t) = sum_a exp(-i E_a t) (B_a . c) B_a."""
    validate_non_negative(t, "t")
    vector = _sector_trajectory(block, c_init.as_vector(), np.array([t]))[0]
    return BlockAmplitudes.from_vector(c_init.n, vector)


def psi_trajectory(params: ModelParams, n: int, times: Times) -> np.ndarray:
    """Closed-form amplitudes (c1, c0, c2) for the initial state |0,n+1>.

    Returns:
        np.ndarray: shape (len(times), 3) in sector basis order
    """
    block = dressed_block(params, n)
    t = np.atleast_1d(np.asarray(times, dtype=float))
    sin_sq = math.sin(block.theta / 2.0) ** 2
    cos_sq = math.cos(block.theta / 2.0) ** 2
    sc = math.sin(block.theta / 2.0) * math.cos(block.theta / 2.0)

    plus = np.exp(-1j * block.e_plus * t)
    minus = np.exp(-1j * block.e_minus * t)
    dark = np.exp(-1j * block.e_dark * t)

    bright = 0.5 * sin_sq * plus + 0.5 * cos_sq * minus
    single = (math.sqrt(2.0) / 2.0) * sc * (plus - minus)
    return np.stack([single, bright + 0.5 * dark, bright - 0.5 * dark], axis=1)


def psi_components(params: ModelParams, n: int, t: float) -> BlockAmplitudes:
    """Sector amplitudes at time t for the initial state |0,n+1>."""
    validate_non_negative(t, "t")
    return BlockAmplitudes.from_vector(n, psi_trajectory(params, n, t)[0])


def _sector_weights(params: ModelParams) -> Tuple[int, np.ndarray]:
    n_max = params.resolved_n_max
    tail = tail_mass(params.alpha, n_max)
    if tail > TAIL_WARNING_THRESHOLD:
        logger.warning(
            "Fock truncation n_max=%d drops Poisson mass %.3e (alpha=%g)",
            n_max, tail, params.alpha,
        )
    return n_max, poisson_weights(params.alpha, n_max)


def exciton_populations(params: ModelParams, times: Times) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Coherent-field averaged populations (P0, P1, P2) for excitons starting in |0>.

    Sector n carries Poisson weight P(n+1); the |0,0> component never leaves P0.
    """
    check_dark_regime(params)
    n_max, weights = _sector_weights(params)
    t = np.atleast_1d(np.asarray(times, dtype=float))

    p0 = np.full(t.shape, weights[0])
    p1 = np.zeros(t.shape)
    p2 = np.zeros(t.shape)
    for n in range(n_max):
        weight = weights[n + 1]
        if weight == 0:
            continue
        amplitudes = psi_trajectory(params, n, t)
        p1 += weight * np.abs(amplitudes[:, 0]) ** 2
        p0 += weight * np.abs(amplitudes[:, 1]) ** 2
        p2 += weight * np.abs(amplitudes[:, 2]) ** 2
    return p0, p1, p2


def exciton_population(params: ModelParams, times: Times) -> Union[float, np.ndarray]:
    """P1(t) = sum_n P(n+1) |c1^(n)(t)|^2; scalar in, scalar out."""
    _, p1, _ = exciton_populations(params, times)
    p1 = np.clip(p1, 0.0, 1.0)
    if np.ndim(times) == 0:
        return float(p1[0])
    return p1


def coherent_joint_state(alpha: float, n_max: int) -> JointState:
    """|0> x |alpha> truncated to photon numbers 0..n_max, in sector form."""
    amplitudes = np.sqrt(poisson_weights(alpha, n_max))
    sectors = tuple(
        BlockAmplitudes(n=n, c1=0j, c0=complex(amplitudes[n + 1]), c2=0j)
        for n in range(n_max)
    )
    return JointState(sectors=sectors, vacuum=complex(amplitudes[0]))


def evolve_joint(params: ModelParams, state: JointState, t: float) -> JointState:
    """Evolve every sector independently; |0,0> only picks up exp(-i E0 t)."""
    e0, _, _ = energies(params)
    sectors = tuple(evolve_block(dressed_block(params, s.n), s, t) for s in state.sectors)
    return JointState(sectors=sectors, vacuum=state.vacuum * np.exp(-1j * e0 * t))


def mean_rabi_period(params: ModelParams) -> float:
    """Poisson-weighted mean of 2 pi / Omega_n over the retained sectors."""
    n_max = params.resolved_n_max
    weights = poisson_weights(params.alpha, n_max)[1:]
    rabi = rabi_frequency(params, np.arange(n_max))
    if np.any(rabi == 0) or weights.sum() == 0:
        return math.inf
    return float(np.sum(weights * 2.0 * np.pi / rabi) / weights.sum())


def shortest_rabi_period(params: ModelParams) -> float:
    """2 pi / Omega of the highest retained sector."""
    rabi = float(rabi_frequency(params, max(params.resolved_n_max - 1, 0)))
    return math.inf if rabi == 0 else 2.0 * np.pi / rabi


def revival_time_estimate(params: ModelParams) -> float:
    """2 pi / (dOmega/dn) at the mean photon number; infinite without drive."""
    if params.drive == 0:
        return math.inf
    n_bar = max(params.alpha ** 2 - 1.0, 0.0)
    rabi = float(rabi_frequency(params, n_bar))
    return 2.0 * np.pi * rabi / (8.0 * params.drive ** 2)


def collapse_metrics(
    times: np.ndarray,
    population: np.ndarray,
    window: float,
    shortest_period: Optional[float] = None,
) -> CollapseMetrics:
    """Collapse and revival times from the rolling oscillation envelope.

    The envelope is half the peak-to-peak swing over a window of one mean Rabi
    period. Collapse is the first window centre where the envelope falls under
    20% of its initial value and stays there for three windows; revival is the
    envelope maximum of the first later burst above 50% of the initial value.

    Raises:
        ValidationError: If the series is too short, non-uniform or undersampled
    """
    times = np.asarray(times, dtype=float)
    values = np.asarray(population, dtype=float)
    if times.shape != values.shape or times.size < 3:
        raise ValidationError("need matching time and value arrays of length >= 3", field="series")

    step = times[1] - times[0]
    if not np.allclose(np.diff(times), step, rtol=1e-6, atol=0.0):
        raise ValidationError("series must be sampled on a uniform grid", field="series")
    if shortest_period is not None and step > shortest_period / SAMPLES_PER_PERIOD * (1 + 1e-9):
        raise ValidationError(
            f"series needs at least {SAMPLES_PER_PERIOD} samples per shortest Rabi period",
            field="series",
            value=step,
        )

    width = max(2, int(round(window / step))) if math.isfinite(window) else values.size
    if values.size < width + 1:
        raise ValidationError("series is shorter than one envelope window", field="series")

    frames = sliding_window_view(values, width)
    envelope = 0.5 * (frames.max(axis=1) - frames.min(axis=1))
    centres = times[: envelope.size] + 0.5 * (width - 1) * step
    initial_peak = float(envelope[0])

    if initial_peak <= 1e-12 * max(1.0, float(np.max(np.abs(values)))):
        return CollapseMetrics(None, None, initial_peak, window)

    below = envelope < 0.2 * initial_peak
    hold = 3 * width
    collapse_index = None
    for k in np.flatnonzero(below):
        if k + hold > below.size:
            break
        if below[k:k + hold].all():
            collapse_index = int(k)
            break

    if collapse_index is None:
        return CollapseMetrics(None, None, initial_peak, window)

    t_revival = None
    above = np.flatnonzero(envelope[collapse_index:] > 0.5 * initial_peak)
    if above.size:
        start = collapse_index + int(above[0])
        stop = start
        while stop < envelope.size and envelope[stop] > 0.5 * initial_peak:
            stop += 1
        t_revival = float(centres[start + int(np.argmax(envelope[start:stop]))])

    return CollapseMetrics(float(centres[collapse_index]), t_revival, initial_peak, window)
