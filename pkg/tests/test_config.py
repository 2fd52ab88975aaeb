"""Tests for settings loading and validation."""

import copy
import math

import pytest

from gravicol.config import (
    DEFAULTS_PATH,
    Settings,
    build_settings,
    load_config,
    load_settings,
    sweep_threads,
    validate_settings,
)
from gravicol.errors import InvalidSettings


@pytest.fixture
def defaults():
    return load_config(str(DEFAULTS_PATH))


def test_packaged_defaults_load():
    settings = load_settings()
    assert settings.quadrature.rel_tol == 1e-10
    assert settings.quadrature.truncation_radius == 12.0
    assert math.isinf(settings.integrator.max_step)
    assert settings.integrator.scheme_order == 5
    assert settings.evolver.points == 2048
    assert settings.transition_band == 0.05
    assert settings.sweep.fixed["si"] == {"mass": 1e-17, "sigma0": 1e-7}


def test_defaults_match_dataclass_defaults():
    assert load_settings().to_dict() == Settings().to_dict()


def test_defaults_are_valid(defaults):
    assert validate_settings(defaults) == []


def test_missing_file():
    with pytest.raises(FileNotFoundError):
        load_config("/nonexistent/gravicol.yaml")


def test_empty_file(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    assert load_config(str(path)) == {}


def test_missing_section(defaults):
    config = copy.deepcopy(defaults)
    del config["evolver"]
    assert "Missing required section: evolver" in validate_settings(config)


def test_field_errors(defaults):
    config = copy.deepcopy(defaults)
    del config["quadrature"]["abs_tol"]
    config["integrator"]["rel_tol"] = "tight"
    config["criteria"]["transition_band"] = 1.5
    config["sweep"]["max_threads"] = 0
    config["sweep"]["fixed"]["natural"]["mass"] = -1.0
    errors = validate_settings(config)
    assert "Missing required field: quadrature.abs_tol" in errors
    assert "integrator.rel_tol must be a number" in errors
    assert "criteria.transition_band must be in [0, 1)" in errors
    assert "sweep.max_threads must be a positive integer" in errors
    assert "sweep.fixed.natural.mass must be a positive number" in errors


def test_build_joins_errors(defaults):
    config = copy.deepcopy(defaults)
    del config["criteria"]
    del config["sweep"]
    with pytest.raises(InvalidSettings, match="criteria.*; .*sweep"):
        build_settings(config)


def test_spec_level_rejection(defaults):
    config = copy.deepcopy(defaults)
    config["evolver"]["points"] = 64
    with pytest.raises(InvalidSettings):
        build_settings(config)


def test_custom_file(tmp_path, defaults):
    import yaml

    config = copy.deepcopy(defaults)
    config["criteria"]["transition_band"] = 0.1
    path = tmp_path / "custom.yaml"
    path.write_text(yaml.safe_dump(config))
    assert load_settings(path).transition_band == 0.1


class TestThreads:
    def test_environment_lowers_default(self, monkeypatch):
        monkeypatch.delenv("GRAVICOL_THREADS", raising=False)
        default = sweep_threads(load_settings())
        monkeypatch.setenv("GRAVICOL_THREADS", "1")
        assert sweep_threads(load_settings()) == 1
        monkeypatch.setenv("GRAVICOL_THREADS", "3")
        assert sweep_threads(load_settings()) == min(default, 3)

    def test_environment_never_raises_default(self, monkeypatch):
        monkeypatch.delenv("GRAVICOL_THREADS", raising=False)
        default = sweep_threads(load_settings())
        monkeypatch.setenv("GRAVICOL_THREADS", "64")
        assert sweep_threads(load_settings()) == default

    @pytest.mark.parametrize("raw", ["0", "-2", "many"])
    def test_bad_override(self, raw, monkeypatch):
        monkeypatch.setenv("GRAVICOL_THREADS", raw)
        with pytest.raises(InvalidSettings):
            sweep_threads()

    def test_capped_by_settings(self, monkeypatch):
        monkeypatch.delenv("GRAVICOL_THREADS", raising=False)
        assert 1 <= sweep_threads(load_settings()) <= 8
