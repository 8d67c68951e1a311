"""Tests for configuration files and run configuration."""
import unittest

import pytest

from qdot_bell.models.run_config import RunConfig
from qdot_bell.utils.config import CONFIG_ENV_VAR, load_config, merge_config, parse_config_text
from qdot_bell.utils.errors import ConfigurationError


class TestParseConfigText(unittest.TestCase):
    """Test case for key = value parsing."""

    def test_comments_and_blank_lines(self):
        text = "# run\n\nalpha = 5   # amplitude\n tmax=auto\n"
        self.assertEqual(parse_config_text(text), {"alpha": "5", "tmax": "auto"})

    def test_missing_separator(self):
        with self.assertRaises(ConfigurationError) as ctx:
            parse_config_text("alpha = 5\nbroken line\n")
        self.assertIn("Line 2", ctx.exception.message)


def test_load_text_and_yaml(tmp_path):
    text_file = tmp_path / "run.conf"
    text_file.write_text("n = 4\n", encoding="utf-8")
    assert load_config(str(text_file)) == {"n": "4"}

    yaml_file = tmp_path / "run.yml"
    yaml_file.write_text("n: 4\nbare: true\n", encoding="utf-8")
    assert load_config(str(yaml_file)) == {"n": 4, "bare": True}


def test_yaml_must_be_mapping(tmp_path):
    yaml_file = tmp_path / "run.yaml"
    yaml_file.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_config(str(yaml_file))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigurationError):
        load_config(str(tmp_path / "absent.conf"))


def test_environment_fallback(tmp_path, monkeypatch):
    config = tmp_path / "env.conf"
    config.write_text("gamma = 1e9\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_ENV_VAR, str(config))
    assert load_config() == {"gamma": "1e9"}
    monkeypatch.delenv(CONFIG_ENV_VAR)
    assert load_config() == {}


def test_merge_precedence():
    merged = merge_config({"n": 10, "a": 1.0}, {"n": "3", "gamma": "2"}, {"n": 1, "a": None})
    assert merged == {"n": 1, "a": 1.0, "gamma": "2"}


class TestRunConfig(unittest.TestCase):
    """Test case for the RunConfig model."""

    def test_text_round_trip(self):
        config = RunConfig(scenario="pulse", n=3, tmax=2.5e-14, gamma=1e9, bare=True)
        self.assertEqual(RunConfig.from_text(config.to_text()), config)

    def test_auto_values(self):
        config = RunConfig.from_text("nmax = auto\nsteps = AUTO\n")
        self.assertIsNone(config.nmax)
        self.assertIsNone(config.steps)
        self.assertIn("nmax = auto\n", config.to_text())

    def test_unknown_key(self):
        with self.assertRaises(ConfigurationError) as ctx:
            RunConfig.from_dict({"colour": "blue"})
        self.assertEqual(ctx.exception.config_key, "colour")

    def test_invalid_values(self):
        for data in ({"n": "2.5"}, {"order": "3"}, {"units": "cgs"}, {"bare": "maybe"}):
            with self.assertRaises(ConfigurationError):
                RunConfig.from_dict(data)

    def test_model_params_are_internal(self):
        params = RunConfig().model_params()
        self.assertEqual(params.omega, 1.0)
        self.assertAlmostEqual(params.drive, 0.04)
        self.assertEqual(params.resolved_n_max, 75)
        e0, e1, e2 = params.energy_override
        self.assertEqual(e0, e2)
        self.assertEqual(e1, e0)

    def test_detuning_places_single_exciton_level(self):
        params = RunConfig(detuning=2e13).model_params()
        e0, e1, _ = params.energy_override
        self.assertAlmostEqual(e1 - e0, 0.02)

    def test_bare_levels(self):
        params = RunConfig(bare=True, e=1e13).model_params()
        self.assertIsNone(params.energy_override)

    def test_unphysical_parameters(self):
        with self.assertRaises(ConfigurationError):
            RunConfig(omega=0.0).model_params()

    def test_unit_conversion(self):
        config = RunConfig(omega=1e15)
        self.assertAlmostEqual(config.internal_time(2e-15), 2.0)
        self.assertAlmostEqual(config.output_time(2.0), 2e-15)
        self.assertEqual(config.replace(units="omega").output_time(2.0), 2.0)
        self.assertAlmostEqual(config.output_energy(0.1), 1e14)
