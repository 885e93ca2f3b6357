"""Application configuration.

Centralizes environment-driven settings so the entrypoint (main.py) stays thin.
Library functions never read the environment; only the CLI does.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    raw = raw.strip().lower()
    return raw in {"1", "true", "yes", "y", "on"}


def _env_str(name: str, default: str) -> str:
    return os.getenv(name, default)


def _env_int(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        return default
    return value if value >= minimum else default


def _env_level(name: str, default: str) -> str:
    level = _env_str(name, default).strip().upper()
    return level if level in logging.getLevelNamesMapping() else default


@dataclass(frozen=True)
class AppConfig:
    log_level: str

    r_max_default: int
    r_max_cap: int
    jobs: int

    # https://no-color.org: any value, even empty, disables styling.
    no_color: bool


def load_config() -> AppConfig:
    r_max_cap = _env_int("FANOLAB_R_MAX_CAP", 200, minimum=3)
    r_max_default = min(_env_int("FANOLAB_R_MAX_DEFAULT", 60, minimum=3), r_max_cap)

    return AppConfig(
        log_level=_env_level("FANOLAB_LOG_LEVEL", "WARNING"),
        r_max_default=r_max_default,
        r_max_cap=r_max_cap,
        jobs=_env_int("FANOLAB_JOBS", 1),
        no_color=os.getenv("NO_COLOR") is not None or _env_bool("FANOLAB_NO_COLOR", False),
    )
