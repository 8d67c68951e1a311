"""Model for a resolved scenario run: parameters in absolute units plus run controls."""
import dataclasses
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple

from qdot_bell.models.params import ModelParams
from qdot_bell.utils.config import parse_config_text
from qdot_bell.utils.errors import ConfigurationError, QDotBellError

SCENARIOS = ("dressed", "rabi", "bell", "pulse", "decohere")
FORMATS = ("csv", "table", "json", "markdown")
UNITS = ("absolute", "omega")

AUTO = "auto"


def _parse_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("true", "yes", "1", "on"):
        return True
    if text in ("false", "no", "0", "off"):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _parse_int(value: Any) -> int:
    if isinstance(value, bool):
        raise ValueError(f"not an integer: {value!r}")
    if isinstance(value, float) and not value.is_integer():
        raise ValueError(f"not an integer: {value!r}")
    return int(value)


def _order(value: Any) -> int:
    order = _parse_int(value)
    if order not in (1, 2):
        raise ValueError("expected 1 or 2")
    return order


def _optional(parser: Callable[[Any], Any]) -> Callable[[Any], Any]:
    def parse(value: Any) -> Any:
        if value is None or (isinstance(value, str) and value.strip().lower() == AUTO):
            return None
        return parser(value)
    return parse


def _choice(options: Tuple[str, ...]) -> Callable[[Any], str]:
    def parse(value: Any) -> str:
        text = str(value).strip()
        if text not in options:
            raise ValueError(f"expected one of {', '.join(options)}")
        return text
    return parse


def _text(value: Any) -> str:
    return str(value).strip()


# Key order here is the serialization order of to_text().
FIELD_PARSERS: Dict[str, Callable[[Any], Any]] = {
    "scenario": _optional(_choice(SCENARIOS)),
    "alpha": float,
    "omega": float,
    "w": float,
    "a": float,
    "gamma": float,
    "e": float,
    "detuning": float,
    "bare": _parse_bool,
    "n": _parse_int,
    "nmax": _optional(_parse_int),
    "tmax": _optional(float),
    "steps": _optional(_parse_int),
    "order": _order,
    "units": _choice(UNITS),
    "format": _choice(FORMATS),
    "out": _optional(_text),
}


@dataclass(frozen=True)
class RunConfig:
    """A scenario run with parameters in absolute units.

    Defaults are alpha=5, omega=1e15, W=0.1 omega and A=0.4 W at resonance.

    ``None`` in nmax, tmax and steps means "choose automatically"; it is written
    as ``auto`` in config text.
    """

    scenario: Optional[str] = None
    alpha: float = 5.0
    omega: float = 1e15
    w: float = 1e14
    a: float = 4e13
    gamma: float = 0.0
    e: float = 0.0
    detuning: float = 0.0
    bare: bool = False
    n: int = 10
    nmax: Optional[int] = None
    tmax: Optional[float] = None
    steps: Optional[int] = None
    order: int = 1
    units: str = "absolute"
    format: str = "csv"
    out: Optional[str] = None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunConfig":
        """Create a RunConfig from raw key/value pairs (strings or typed values).

        Args:
            data: Mapping of config keys to values

        Returns:
            RunConfig: New RunConfig instance

        Raises:
            ConfigurationError: If a key is unknown or a value does not parse
        """
        values = {}
        for key, raw in data.items():
            parser = FIELD_PARSERS.get(key)
            if parser is None:
                raise ConfigurationError(f"Unknown configuration key: {key}", config_key=key)
            try:
                values[key] = parser(raw)
            except (TypeError, ValueError) as e:
                raise ConfigurationError(f"Invalid value for {key}: {raw!r} ({e})", config_key=key)
        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        """Convert the run configuration to a dictionary.

        Returns:
            Dict: Dictionary representation in serialization order
        """
        return {key: getattr(self, key) for key in FIELD_PARSERS}

    @classmethod
    def from_text(cls, text: str) -> "RunConfig":
        """Parse ``key = value`` lines; ``#`` starts a comment."""
        return cls.from_dict(parse_config_text(text))

    def to_text(self) -> str:
        """Serialize as ``key = value`` lines accepted by from_text."""
        return "".join(f"{key} = {format_value(value)}\n" for key, value in self.to_dict().items())

    def replace(self, **changes) -> "RunConfig":
        """Return a copy with the given fields changed."""
        return dataclasses.replace(self, **changes)

    def model_params(self) -> ModelParams:
        """Internal parameters with hbar = 1 and omega = 1.

        Unless ``bare`` is set, the levels are placed in the E0 = E2 regime with
        E1 - E0 = detuning, E0 taken from the bare-level formula.

        Raises:
            ConfigurationError: If the parameters are not physical
        """
        override = None
        if not self.bare:
            e0 = self.w - self.e + 0.5 * self.omega
            override = (e0, e0 + self.detuning, e0)
        try:
            params = ModelParams(
                band_gap=self.e,
                interdot=self.w,
                omega=self.omega,
                drive=self.a,
                gamma=self.gamma,
                alpha=self.alpha,
                n_max=self.nmax,
                energy_override=override,
            )
        except QDotBellError as e:
            raise ConfigurationError(e.message, config_key=getattr(e, "field", None))
        return params.normalized()

    def internal_time(self, t: float) -> float:
        """Convert an input time (seconds, like every input) to units of 1/omega."""
        return t * self.omega

    def output_time(self, t):
        """Convert internal times to the reporting units."""
        return t / self.omega if self.units == "absolute" else t

    def output_energy(self, value):
        """Convert internal energies to the reporting units."""
        return value * self.omega if self.units == "absolute" else value


def format_value(value: Any) -> str:
    """Config-text spelling of a value; floats keep full precision."""
    if value is None:
        return AUTO
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)
