"""Models for pure states, post-selected outputs and derived figures of merit."""
import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class BlockAmplitudes:
    """Amplitudes of one sector: c1 on |1,n>, c0 on |0,n+1>, c2 on |2,n+1>."""

    n: int
    c1: complex
    c0: complex
    c2: complex

    @classmethod
    def from_vector(cls, n: int, vector) -> "BlockAmplitudes":
        """Build from a vector in sector basis order (c1, c0, c2)."""
        c1, c0, c2 = (complex(v) for v in vector)
        return cls(n=n, c1=c1, c0=c0, c2=c2)

    @classmethod
    def initial_vacuum(cls, n: int) -> "BlockAmplitudes":
        """Excitons in |0>, field in |n+1>."""
        return cls(n=n, c1=0j, c0=1 + 0j, c2=0j)

    def as_vector(self) -> np.ndarray:
        """Amplitudes in sector basis order (c1, c0, c2)."""
        return np.array([self.c1, self.c0, self.c2], dtype=np.complex128)

    @property
    def norm(self) -> float:
        return math.sqrt(abs(self.c1) ** 2 + abs(self.c0) ** 2 + abs(self.c2) ** 2)

    def to_dict(self) -> Dict:
        return {"n": self.n, "c1": self.c1, "c0": self.c0, "c2": self.c2}


@dataclass(frozen=True)
class JointState:
    """Exciton-field state as sector amplitudes for n = 0..n_max-1 plus |0,0>."""

    sectors: Tuple[BlockAmplitudes, ...]
    vacuum: complex = 0j

    @property
    def n_max(self) -> int:
        return len(self.sectors)

    @property
    def norm(self) -> float:
        return math.sqrt(abs(self.vacuum) ** 2 + sum(s.norm ** 2 for s in self.sectors))

    def to_vector(self) -> np.ndarray:
        """Embed into the exciton x Fock space with photon numbers 0..n_max."""
        stride = self.n_max + 1
        vector = np.zeros(3 * stride, dtype=np.complex128)
        vector[0] = self.vacuum
        for block in self.sectors:
            n = block.n
            vector[1 * stride + n] = block.c1
            vector[0 * stride + n + 1] = block.c0
            vector[2 * stride + n + 1] = block.c2
        return vector


@dataclass(frozen=True)
class PostSelected:
    """Unnormalized exciton state after a photon-number measurement.

    ``phi`` holds the amplitudes on exciton states |0>, |1>, |2>.
    """

    phi: np.ndarray = field(repr=False)
    photon_outcome: int = 0

    @property
    def success_prob(self) -> float:
        return float(np.sum(np.abs(self.phi) ** 2))

    @property
    def single_exciton_residual(self) -> float:
        """|<1|phi>|, zero whenever the Bell branch was selected."""
        return float(abs(self.phi[1]))

    def normalized(self) -> np.ndarray:
        """phi / |phi|; the zero vector stays zero."""
        norm = math.sqrt(self.success_prob)
        if norm == 0:
            return np.zeros(3, dtype=np.complex128)
        return self.phi / norm

    def to_dict(self) -> Dict:
        return {
            "photon_outcome": self.photon_outcome,
            "phi": [complex(v) for v in self.phi],
            "success_prob": self.success_prob,
        }


@dataclass(frozen=True)
class BellDecomposition:
    """Projection of a post-selected state onto (|0> +- |2>)/sqrt(2)."""

    amp_plus: complex
    amp_minus: complex
    p_plus: float
    p_minus: float
    ratio: float

    @property
    def ratio_is_infinite(self) -> bool:
        return math.isinf(self.ratio)

    def to_dict(self) -> Dict:
        return {
            "p_plus": self.p_plus,
            "p_minus": self.p_minus,
            "ratio": self.ratio,
        }


@dataclass(frozen=True)
class PulseDesign:
    """Pulse length that drains the (|0>+|2>) component of sector n."""

    n: int
    pulse_length: float
    residual_p_plus: float
    paper_condition_residual: float
    fidelity: float
    success_prob: float

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "T": self.pulse_length,
            "residual_P_plus": self.residual_p_plus,
            "paper_condition_residual": self.paper_condition_residual,
            "fidelity": self.fidelity,
            "success_prob": self.success_prob,
        }


@dataclass(frozen=True)
class CollapseMetrics:
    """Collapse and revival times of a sampled population; None when not found."""

    t_collapse: Optional[float]
    t_revival: Optional[float]
    initial_peak: float
    window: float

    @property
    def collapse_found(self) -> bool:
        return self.t_collapse is not None

    @property
    def revival_found(self) -> bool:
        return self.t_revival is not None

    def to_dict(self) -> Dict:
        return {
            "t_collapse": self.t_collapse,
            "t_revival": self.t_revival,
            "initial_peak": self.initial_peak,
            "window": self.window,
        }
