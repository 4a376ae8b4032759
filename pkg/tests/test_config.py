# ruff: noqa: D100, D103, ANN201

import pytest
from pydantic import ValidationError

from nano_continuity.core.config import CONFIG_DIR_ENV, Settings, get_config
from nano_continuity.verifier import InstanceBounds, SpaceMode


def test_shipped_defaults():
    settings = get_config()
    assert settings.universe_cap == 16
    assert settings.verify.max_size == 4
    assert settings.verify.exhaustive_size == 4
    assert settings.verify.composition_exhaustive_size == 3
    assert settings.verify.sample_count == 100_000


def test_user_config_overrides_nested_keys(tmp_path, monkeypatch):
    (tmp_path / "config.default.yml").write_text(
        "log_level: WARNING\nverify:\n  seed: 0\n  workers: 1\n",
    )
    (tmp_path / "config.yml").write_text("verify:\n  seed: 42\n")
    monkeypatch.setenv(CONFIG_DIR_ENV, str(tmp_path))
    settings = get_config()
    assert settings.verify.seed == 42
    assert settings.verify.workers == 1
    assert settings.log_level == "WARNING"


def test_missing_files_use_built_in_defaults(tmp_path, monkeypatch):
    monkeypatch.setenv(CONFIG_DIR_ENV, str(tmp_path))
    assert get_config() == Settings()


def test_invalid_config_is_rejected(tmp_path, monkeypatch):
    (tmp_path / "config.default.yml").write_text("verify:\n  exhaustive_size: 9\n")
    monkeypatch.setenv(CONFIG_DIR_ENV, str(tmp_path))
    with pytest.raises(ValidationError):
        get_config()


def test_bounds_from_config_apply_overrides():
    bounds = InstanceBounds.from_config(max_size=2, seed=None, mode="explicit")
    assert bounds.max_size == 2
    assert bounds.mode == SpaceMode.EXPLICIT
    assert bounds.seed == 0
