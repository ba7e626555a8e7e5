from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Optional

from genocchi.errors import ParameterError
from genocchi.families import DEFAULT_PRECISION

from .utils import ensure_dir, get_project_root, try_load_yaml


@dataclass(frozen=True)
class PlatformConfig:
    root_dir: Path
    tasks_dir: Path
    outputs_dir: Path
    logs_dir: Path
    log_level: str = "INFO"
    default_precision: int = DEFAULT_PRECISION


def load_platform_config(
    *,
    root_dir: Optional[Path] = None,
    environ: Mapping[str, str] = os.environ,
) -> PlatformConfig:
    """
    Centralized config loader with env-var overrides.

    GENOCCHI_TASKS_DIR, GENOCCHI_OUTPUTS_DIR, GENOCCHI_LOGS_DIR,
    GENOCCHI_LOG_LEVEL and GENOCCHI_PRECISION override the defaults.
    """
    if root_dir is None:
        root_dir = get_project_root()
    else:
        root_dir = root_dir.resolve()

    tasks_dir = Path(environ.get("GENOCCHI_TASKS_DIR", str(root_dir / "tasks")))
    outputs_dir = Path(environ.get("GENOCCHI_OUTPUTS_DIR", str(root_dir / "outputs")))
    logs_dir = Path(environ.get("GENOCCHI_LOGS_DIR", str(root_dir / "logs")))
    log_level = environ.get("GENOCCHI_LOG_LEVEL", "INFO").upper()
    raw_precision = environ.get("GENOCCHI_PRECISION", str(DEFAULT_PRECISION))
    try:
        default_precision = int(raw_precision)
    except ValueError as e:
        raise ParameterError(f"GENOCCHI_PRECISION must be an integer, got {raw_precision!r}") from e
    if default_precision < 1:
        raise ParameterError("GENOCCHI_PRECISION must be positive")

    # Create the common dirs early so the rest of the runtime can assume they exist.
    ensure_dir(outputs_dir)
    ensure_dir(logs_dir)

    return PlatformConfig(
        root_dir=root_dir,
        tasks_dir=tasks_dir,
        outputs_dir=outputs_dir,
        logs_dir=logs_dir,
        log_level=log_level,
        default_precision=default_precision,
    )


def load_task_config(task_dir: Path) -> dict[str, Any]:
    """
    Load optional task-local defaults.
    Default: tasks/<task>/config.yaml
    """
    return try_load_yaml(task_dir / "config.yaml")


def merge_config(defaults: Mapping[str, Any], overrides: Optional[Mapping[str, Any]]) -> dict[str, Any]:
    # Shallow merge; None in overrides means "flag not given".
    merged: dict[str, Any] = dict(defaults)
    for k, v in (overrides or {}).items():
        if v is not None:
            merged[k] = v
    return merged
