"""Models for density matrices, master-equation trajectories and the small-loss series."""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from qdot_bell.models.dressed import DRESSED_LABELS
from qdot_bell.utils.errors import ValidationError

TRACE_TOL = 1e-9
HERMITIAN_TOL = 1e-10
POSITIVITY_TOL = 1e-8


@dataclass(frozen=True)
class DensityMatrix:
    """A dim x dim complex density operator."""

    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        data = np.array(self.data, dtype=np.complex128)
        if data.ndim != 2 or data.shape[0] != data.shape[1]:
            raise ValidationError("density matrix must be square", field="rho", value=data.shape)
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def pure(cls, vector) -> "DensityMatrix":
        """|psi><psi| for a state vector (not renormalized)."""
        psi = np.asarray(vector, dtype=np.complex128)
        return cls(np.outer(psi, np.conj(psi)))

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.data))

    @property
    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.data - self.data.conj().T)))

    @property
    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(0.5 * (self.data + self.data.conj().T))[0])

    def is_physical(self) -> bool:
        """Hermitian, unit trace and positive within the integrator tolerances."""
        return (
            self.hermiticity_error <= HERMITIAN_TOL
            and abs(self.trace - 1.0) <= TRACE_TOL
            and self.min_eigenvalue >= -POSITIVITY_TOL
        )


@dataclass(frozen=True)
class MasterTrajectory:
    """Density matrices sampled on a time grid by the master-equation integrator."""

    times: np.ndarray = field(repr=False)
    states: np.ndarray = field(repr=False)
    gamma: float = 0.0

    def __len__(self) -> int:
        return self.times.size

    def __getitem__(self, index: int) -> DensityMatrix:
        return DensityMatrix(self.states[index])

    @property
    def trace_errors(self) -> np.ndarray:
        """|Tr rho(t) - 1| at every sample."""
        return np.abs(np.trace(self.states, axis1=1, axis2=2) - 1.0)

    @property
    def hermiticity_errors(self) -> np.ndarray:
        return np.max(np.abs(self.states - np.conj(np.swapaxes(self.states, 1, 2))), axis=(1, 2))

    def min_eigenvalues(self) -> np.ndarray:
        hermitian = 0.5 * (self.states + np.conj(np.swapaxes(self.states, 1, 2)))
        return np.linalg.eigvalsh(hermitian)[:, 0]


@dataclass(frozen=True)
class PerturbationSeries:
    """rho(t) = rho(t,0) + Gamma rho_1(t) + Gamma^2/2 rho_2(t) + ..., sampled on ``times``.

    ``rho1`` is None for order 0 and ``rho2`` is None below order 2.
    """

    order: int
    times: np.ndarray = field(repr=False)
    rho0: np.ndarray = field(repr=False)
    rho1: Optional[np.ndarray] = field(default=None, repr=False)
    rho2: Optional[np.ndarray] = field(default=None, repr=False)

    def terms(self) -> Tuple[np.ndarray, ...]:
        return tuple(term for term in (self.rho0, self.rho1, self.rho2) if term is not None)

    def trace_errors(self) -> Dict[int, np.ndarray]:
        """Trace defect per order: |Tr rho(t,0) - 1| and |Tr rho_k(t)| for k >= 1."""
        errors = {0: np.abs(np.trace(self.rho0, axis1=1, axis2=2) - 1.0)}
        for k, term in enumerate(self.terms()[1:], start=1):
            errors[k] = np.abs(np.trace(term, axis1=1, axis2=2))
        return errors


@dataclass(frozen=True)
class DressedCorrection:
    """First-order correction of one sector in the dressed basis (d, +, -) at time t.

    ``exact`` integrates the time-dependent f_{a,b}(tau); ``closed_form`` uses the
    frozen (beat-averaged) ``frozen_f``; ``numeric`` is the hierarchy's rho_1
    projected on the dressed states. ``printed`` and ``swapped`` integrate the two
    readings of the f_{a,b} product form.
    """

    n: int
    t: float
    frozen_f: np.ndarray = field(repr=False)
    exact: np.ndarray = field(repr=False)
    closed_form: np.ndarray = field(repr=False)
    numeric: np.ndarray = field(repr=False)
    printed: np.ndarray = field(repr=False)
    swapped: np.ndarray = field(repr=False)

    @property
    def numeric_residual(self) -> float:
        return float(np.max(np.abs(self.exact - self.numeric)))

    @property
    def printed_residual(self) -> float:
        return float(np.max(np.abs(self.printed - self.numeric)))

    @property
    def swapped_residual(self) -> float:
        return float(np.max(np.abs(self.swapped - self.numeric)))

    def to_dict(self) -> Dict:
        """Convert the correction to a dictionary.

        Returns:
            Dict: Tables keyed by "ab" label pairs, plus the residuals
        """
        def table(values: np.ndarray) -> Dict[str, complex]:
            return {
                a + b: complex(values[i, j])
                for i, a in enumerate(DRESSED_LABELS)
                for j, b in enumerate(DRESSED_LABELS)
            }

        return {
            "n": self.n,
            "t": self.t,
            "f_frozen": table(self.frozen_f),
            "rho1_exact": table(self.exact),
            "rho1_closed_form": table(self.closed_form),
            "rho1_numeric": table(self.numeric),
            "numeric_residual": self.numeric_residual,
            "printed_residual": self.printed_residual,
            "swapped_residual": self.swapped_residual,
        }
