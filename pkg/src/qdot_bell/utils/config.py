"""Configuration utilities for reading run configuration files."""
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from qdot_bell.utils.errors import ConfigurationError

# Environment variable naming a config file used when --config is absent
CONFIG_ENV_VAR = "QDOT_BELL_CONFIG"

YAML_SUFFIXES = (".yml", ".yaml")


def parse_config_text(text: str) -> Dict[str, str]:
    """Parse UTF-8 ``key = value`` lines.

    Blank lines are skipped and ``#`` starts a comment anywhere on a line.

    Args:
        text: Config file contents

    Returns:
        Dict: Raw string values keyed by config key

    Raises:
        ConfigurationError: If a line has no ``=`` or an empty key
    """
    values: Dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        key, sep, value = content.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigurationError(f"Line {number}: expected 'key = value', got {line.strip()!r}")
        values[key] = value.strip()
    return values


def get_config_path(path: Optional[str] = None) -> Optional[str]:
    """Get the configuration file path.

    Uses the explicit path if given, otherwise the QDOT_BELL_CONFIG
    environment variable.

    Args:
        path: Optional explicit path

    Returns:
        Optional[str]: Path to the configuration file, or None
    """
    return path or os.environ.get(CONFIG_ENV_VAR) or None


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """Load configuration from file.

    Files ending in .yml or .yaml must hold a YAML mapping; anything else is
    read as ``key = value`` text.

    Args:
        path: Optional explicit path (falls back to QDOT_BELL_CONFIG)

    Returns:
        Dict: Configuration data, empty when no file is configured

    Raises:
        ConfigurationError: If the configuration file cannot be read or parsed
    """
    config_path = get_config_path(path)
    if config_path is None:
        return {}

    try:
        text = Path(config_path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"Failed to read configuration file: {str(e)}")

    if config_path.lower().endswith(YAML_SUFFIXES):
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid configuration file format: {str(e)}")
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ConfigurationError("YAML configuration must be a mapping of keys to values")
        return {str(key): value for key, value in data.items()}

    return parse_config_text(text)


def merge_config(defaults: Dict[str, Any], file_values: Dict[str, Any], cli_values: Dict[str, Any]) -> Dict[str, Any]:
    """Merge configuration layers: command line over file over defaults.

    Command-line entries that are None were not given and do not override.

    Args:
        defaults: Built-in defaults
        file_values: Values read from the config file
        cli_values: Values given on the command line

    Returns:
        Dict: Merged configuration
    """
    merged = dict(defaults)
    merged.update(file_values)
    merged.update({key: value for key, value in cli_values.items() if value is not None})
    return merged
