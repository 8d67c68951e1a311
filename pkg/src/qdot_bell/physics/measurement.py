"""Photon-number post-selection, Bell-basis decomposition and pulse-length design."""
import logging
import math
from typing import Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from qdot_bell.models.params import ModelParams
from qdot_bell.models.states import BellDecomposition, BlockAmplitudes, PostSelected, PulseDesign
from qdot_bell.physics.dynamics import psi_trajectory
from qdot_bell.physics.model import dressed_block
from qdot_bell.utils.errors import PulseWindowError, ValidationError
from qdot_bell.utils.validation import validate_window

logger = logging.getLogger(__name__)

INV_SQRT2 = 1.0 / math.sqrt(2.0)
RATIO_FLOOR = 1e-15
GRID_POINTS_PER_BEAT = 200
PULSE_XTOL = 1e-12
REFINED_DEPTH_RTOL = 1e-6


def post_select(state: BlockAmplitudes, photon_outcome: int) -> PostSelected:
    """Project a sector state on a photon-number outcome.

    Outcome n+1 keeps the |0>, |2> amplitudes (the Bell branch); outcome n
    keeps the single-exciton amplitude.

    Raises:
        ValidationError: If the outcome does not belong to the state's sector
    """
    if photon_outcome == state.n + 1:
        phi = np.array([state.c0, 0j, state.c2], dtype=np.complex128)
    elif photon_outcome == state.n:
        phi = np.array([0j, state.c1, 0j], dtype=np.complex128)
    else:
        raise ValidationError(
            f"sector {state.n} only holds photon numbers {state.n} and {state.n + 1}",
            field="photon_outcome",
            value=photon_outcome,
        )
    phi.setflags(write=False)
    return PostSelected(phi=phi, photon_outcome=photon_outcome)


def _ratio(p_plus, p_minus):
    p_minus = np.asarray(p_minus)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(p_minus < RATIO_FLOOR, np.inf, np.asarray(p_plus) / p_minus)


def bell_decompose(ps: PostSelected) -> BellDecomposition:
    """Amplitudes on (|0> +- |2>)/sqrt(2), with the minus amplitude made real positive.

    P+- are joint probabilities (measurement outcome and Bell component); the
    ratio is infinite when P- falls below 1e-15.
    """
    phi0, _, phi2 = ps.phi
    amp_plus = (phi0 + phi2) * INV_SQRT2
    amp_minus = (phi0 - phi2) * INV_SQRT2

    if abs(amp_minus) > 0:
        phase = np.conj(amp_minus) / abs(amp_minus)
        amp_plus *= phase
        amp_minus = abs(amp_minus)

    p_plus = abs(amp_plus) ** 2
    p_minus = abs(amp_minus) ** 2
    return BellDecomposition(
        amp_plus=complex(amp_plus),
        amp_minus=complex(amp_minus),
        p_plus=float(p_plus),
        p_minus=float(p_minus),
        ratio=float(_ratio(p_plus, p_minus)),
    )


def bell_fidelity(ps: PostSelected, sign: int = -1) -> float:
    """|<B+-|phi>|^2 / <phi|phi> for B+- = (|0> +- |2>)/sqrt(2)."""
    target = np.array([INV_SQRT2, 0.0, sign * INV_SQRT2])
    return float(abs(np.vdot(target, ps.normalized())) ** 2)


def bell_series(params: ModelParams, n: int, times) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """P+, P- and their ratio along a time grid for the initial state |0,n+1>."""
    amplitudes = psi_trajectory(params, n, times)
    p_plus = 0.5 * np.abs(amplitudes[:, 1] + amplitudes[:, 2]) ** 2
    p_minus = 0.5 * np.abs(amplitudes[:, 1] - amplitudes[:, 2]) ** 2
    return p_plus, p_minus, _ratio(p_plus, p_minus)


def _bright_magnitude(params: ModelParams, n: int, times) -> np.ndarray:
    amplitudes = psi_trajectory(params, n, times)
    return np.abs(amplitudes[:, 1] + amplitudes[:, 2]) * INV_SQRT2


def _refine_minimum(objective, a: float, b: float, c: float) -> float:
    try:
        result = minimize_scalar(objective, bracket=(a, b, c), method="golden", tol=PULSE_XTOL)
    except ValueError:
        # flat neighbourhood: the three grid points do not form a strict bracket
        result = minimize_scalar(
            objective, bounds=(a, c), method="bounded", options={"xatol": PULSE_XTOL * c}
        )
    return float(result.x)


def solve_pulse_length(params: ModelParams, n: int, t_window: Sequence[float]) -> PulseDesign:
    """Pulse length T minimising P+(T) inside t_window, for the initial state |0,n+1>.

    A grid scan at (2 pi / Omega) / 200 brackets every interior local minimum
    and golden-section search refines each one; the earliest whose refined
    depth matches the deepest is returned. The pulse
    condition cos(E+ T) sin^2(theta/2) + cos(E- T) cos^2(theta/2) is reported
    with energies measured from the dark level.

    Raises:
        ValidationError: If the window spans fewer than two beat periods
        PulseWindowError: If the window holds no interior local minimum
    """
    block = dressed_block(params, n)
    period = block.beat_period
    if not math.isfinite(period):
        raise ValidationError("sector has no beat: drive and detuning are both zero", field="drive")
    start, end = validate_window(t_window, 2.0 * period)

    step = period / GRID_POINTS_PER_BEAT
    count = int(math.ceil((end - start) / step - 1e-9)) + 1
    grid = np.linspace(start, end, count)
    magnitude = _bright_magnitude(params, n, grid)

    interior = np.arange(1, grid.size - 1)
    is_min = (magnitude[interior] <= magnitude[interior - 1]) & (magnitude[interior] <= magnitude[interior + 1])
    minima = interior[is_min]
    if minima.size == 0:
        raise PulseWindowError("pulse window contains no local minimum of P+", window=(start, end))

    def objective(t: float) -> float:
        return float(_bright_magnitude(params, n, t)[0])

    # Every beat repeats the same depth, so grid depth cannot rank the minima.
    candidates = [_refine_minimum(objective, grid[k - 1], grid[k], grid[k + 1]) for k in minima]
    depths = np.array([objective(t) for t in candidates])
    tolerance = REFINED_DEPTH_RTOL * max(float(magnitude.max()), 1e-300)
    pulse = candidates[int(np.flatnonzero(depths <= depths.min() + tolerance)[0])]

    amplitudes = psi_trajectory(params, n, pulse)[0]
    selected = post_select(BlockAmplitudes.from_vector(n, amplitudes), n + 1)
    decomposition = bell_decompose(selected)

    sin_sq = math.sin(block.theta / 2.0) ** 2
    cos_sq = math.cos(block.theta / 2.0) ** 2
    condition = (
        math.cos((block.e_plus - block.e_dark) * pulse) * sin_sq
        + math.cos((block.e_minus - block.e_dark) * pulse) * cos_sq
    )

    logger.info(
        "sector n=%d: T=%.12g, P+=%.3e, fidelity=%.12f", n, pulse,
        decomposition.p_plus, bell_fidelity(selected),
    )
    return PulseDesign(
        n=n,
        pulse_length=pulse,
        residual_p_plus=decomposition.p_plus,
        paper_condition_residual=condition,
        fidelity=bell_fidelity(selected),
        success_prob=selected.success_prob,
    )
