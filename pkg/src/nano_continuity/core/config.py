"""Intialise application config."""

import logging
import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ConfigDict, Field

logger = logging.getLogger(__name__)

CONFIG_DIR_ENV = "NANO_CONTINUITY_CFG"


class VerifySettings(BaseModel):
    """Default instance bounds for the verifier."""

    model_config = ConfigDict(frozen=True)

    max_size: int = Field(4, ge=1, description="Largest universe per side.")
    exhaustive_size: int = Field(
        4,
        ge=1,
        le=4,
        description="Largest size scanned exhaustively for pair checks.",
    )
    composition_exhaustive_size: int = Field(
        3,
        ge=1,
        le=4,
        description="Largest size scanned exhaustively for triple checks.",
    )
    seed: int = Field(0, description="Seed for every sampled scan.")
    sample_count: int = Field(
        100_000,
        ge=0,
        description="Number of sampled instances beyond exhaustive reach.",
    )
    explicit_sample_count: int = Field(
        64,
        ge=1,
        description="Number of sampled explicit topologies per size >= 4.",
    )
    workers: int = Field(1, ge=1, description="Threads used for pair scans.")
    mode: str = Field("nano", description="One of nano, explicit or both.")


class Settings(BaseModel):
    """Validated project configuration."""

    model_config = ConfigDict(frozen=True)

    universe_cap: int = Field(16, ge=1, le=16)
    log_level: str = "WARNING"
    verify: VerifySettings = VerifySettings()


def _config_dir() -> Path:
    override = os.environ.get(CONFIG_DIR_ENV)
    if override:
        return Path(override)
    # <project>/src/nano_continuity/core/config.py
    return Path(__file__).resolve().parents[3] / "cfg"


def _merge(base: dict[str, Any], update: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for k, v in update.items():
        if isinstance(v, dict) and isinstance(merged.get(k), dict):
            merged[k] = {**merged[k], **v}
        else:
            merged[k] = v
    return merged


def get_config() -> Settings:
    """Parse project config yaml."""
    config_: dict[str, Any] = {}

    cfg_path = _config_dir()
    default_config_path = cfg_path / "config.default.yml"
    user_config_path = cfg_path / "config.yml"

    try:
        with Path.open(default_config_path, "r", encoding="utf-8") as file:
            logger.info(
                f"Loading default configuration file from {default_config_path}",
            )
            config_ = yaml.safe_load(file) or {}
    except FileNotFoundError:
        logger.warning(
            f"No default configuration file found at {default_config_path}, "
            "using built-in defaults",
        )

    try:
        logger.debug(
            f"Looking for user configuration file at {user_config_path}",
        )
        with Path.open(user_config_path, "r", encoding="utf-8") as f:
            user_config = yaml.safe_load(f) or {}
            config_ = _merge(config_, user_config)
    except FileNotFoundError:
        logger.debug(
            f"No user configuration file found at {user_config_path}",
        )

    return Settings.model_validate(config_)


config = get_config()
