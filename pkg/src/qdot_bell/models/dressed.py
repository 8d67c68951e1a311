"""Model for the dressed eigensystem of one photon sector."""
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

# Row order of DressedBlock.coefficients.
DRESSED_LABELS = ("d", "+", "-")

# Column index in the sector basis (|1,n>, |0,n+1>, |2,n+1>) for each exciton label.
SECTOR_INDEX = {1: 0, 0: 1, 2: 2}


@dataclass(frozen=True)
class DressedBlock:
    """Dressed states of the sector spanned by |1,n>, |0,n+1>, |2,n+1>.

    ``coefficients`` is a real 3x3 table whose rows are the dark, plus and
    minus eigenvectors written in the sector basis order above.
    """

    n: int
    omega1: float
    rabi_frequency: float
    theta: float
    e_dark: float
    e_plus: float
    e_minus: float
    coefficients: np.ndarray = field(repr=False)

    @property
    def energies(self) -> np.ndarray:
        """Energies in DRESSED_LABELS order."""
        return np.array([self.e_dark, self.e_plus, self.e_minus])

    @property
    def beat_period(self) -> float:
        """Period 2 pi / Omega of the bright doublet beat."""
        if self.rabi_frequency == 0:
            return float("inf")
        return 2.0 * np.pi / self.rabi_frequency

    def coefficient(self, label: str, exciton: int) -> float:
        """B_{a,i}: component of dressed state ``label`` on exciton state ``exciton``."""
        return float(self.coefficients[DRESSED_LABELS.index(label), SECTOR_INDEX[exciton]])

    def row(self, label: str) -> np.ndarray:
        """Dressed eigenvector ``label`` in the sector basis."""
        return self.coefficients[DRESSED_LABELS.index(label)]

    def to_dict(self) -> Dict:
        """Convert the dressed block to a dictionary.

        Returns:
            Dict: Dictionary representation of the block
        """
        return {
            "n": self.n,
            "theta": self.theta,
            "rabi_frequency": self.rabi_frequency,
            "e_dark": self.e_dark,
            "e_plus": self.e_plus,
            "e_minus": self.e_minus,
        }
