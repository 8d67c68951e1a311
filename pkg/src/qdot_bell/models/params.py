"""Model for the physical parameters of the coupled-dot system."""
import dataclasses
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from qdot_bell.utils.validation import (
    validate_finite,
    validate_non_negative,
    validate_non_negative_int,
    validate_positive,
)
from qdot_bell.utils.errors import ValidationError


def coherent_truncation(alpha: float) -> int:
    """Fock cutoff ceil(alpha^2 + 8 alpha + 10), keeping the Poisson tail below 1e-10 for alpha <= 10."""
    return int(math.ceil(alpha ** 2 + 8.0 * alpha + 10.0))


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters with hbar = 1; energies and rates share one unit.

    ``energy_override`` replaces the (E0, E1, E2) formulas derived from the
    band gap, interdot interaction and laser frequency. ``n_max`` left as
    None resolves to the coherent-field truncation rule.
    """

    band_gap: float = 0.0
    interdot: float = 0.1
    omega: float = 1.0
    drive: float = 0.04
    gamma: float = 0.0
    alpha: float = 5.0
    n_max: Optional[int] = None
    energy_override: Optional[Tuple[float, float, float]] = None

    def __post_init__(self):
        validate_finite(self.band_gap, "band_gap")
        validate_finite(self.interdot, "interdot")
        validate_positive(self.omega, "omega")
        validate_non_negative(self.drive, "drive")
        validate_non_negative(self.gamma, "gamma")
        validate_non_negative(self.alpha, "alpha")
        if self.n_max is not None:
            validate_non_negative_int(self.n_max, "n_max")
        if self.energy_override is not None:
            if len(self.energy_override) != 3:
                raise ValidationError(
                    "energy_override must hold exactly (E0, E1, E2)",
                    field="energy_override",
                    value=self.energy_override,
                )
            object.__setattr__(
                self,
                "energy_override",
                tuple(validate_finite(e, "energy_override") for e in self.energy_override),
            )

    @property
    def resolved_n_max(self) -> int:
        """Fock truncation, falling back to ceil(alpha^2 + 8 alpha + 10)."""
        if self.n_max is not None:
            return self.n_max
        return coherent_truncation(self.alpha)

    def replace(self, **changes) -> "ModelParams":
        """Return a copy with the given fields changed."""
        return dataclasses.replace(self, **changes)

    def normalized(self) -> "ModelParams":
        """Express every energy and rate in units of the laser frequency."""
        scale = self.omega
        override = None
        if self.energy_override is not None:
            override = tuple(e / scale for e in self.energy_override)
        return self.replace(
            band_gap=self.band_gap / scale,
            interdot=self.interdot / scale,
            omega=1.0,
            drive=self.drive / scale,
            gamma=self.gamma / scale,
            energy_override=override,
        )

    @classmethod
    def from_dict(cls, data: Dict) -> "ModelParams":
        """Create a ModelParams instance from a dictionary.

        Args:
            data: Dictionary containing parameter values

        Returns:
            ModelParams: New ModelParams instance
        """
        override = data.get("energy_override")
        return cls(
            band_gap=data.get("band_gap", 0.0),
            interdot=data.get("interdot", 0.1),
            omega=data.get("omega", 1.0),
            drive=data.get("drive", 0.04),
            gamma=data.get("gamma", 0.0),
            alpha=data.get("alpha", 5.0),
            n_max=data.get("n_max"),
            energy_override=tuple(override) if override is not None else None,
        )

    def to_dict(self) -> Dict:
        """Convert the parameters to a dictionary.

        Returns:
            Dict: Dictionary representation of the parameters
        """
        result = {
            "band_gap": self.band_gap,
            "interdot": self.interdot,
            "omega": self.omega,
            "drive": self.drive,
            "gamma": self.gamma,
            "alpha": self.alpha,
            "n_max": self.resolved_n_max,
        }

        if self.energy_override is not None:
            result["energy_override"] = list(self.energy_override)

        return result
