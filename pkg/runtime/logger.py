from __future__ import annotations

import logging
from pathlib import Path

from .common import EventMeta
from .utils import ensure_dir

LIBRARY_LOGGER = "genocchi"
LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] [%(task)s/%(run_id)s/%(agent_id)s] %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class RunContextFilter(logging.Filter):
    """Stamps task, run id and agent id on every record that reaches a run handler."""

    def __init__(self, meta: EventMeta) -> None:
        super().__init__()
        self.meta = meta

    def filter(self, record: logging.LogRecord) -> bool:  # type: ignore[override]
        record.task = self.meta.task
        record.run_id = self.meta.run_id
        record.agent_id = self.meta.agent_id
        return True


def run_log_path(logs_dir: Path, meta: EventMeta) -> Path:
    """logs/<task>/<run_id>/<agent_id>.log"""
    return logs_dir / meta.task / meta.run_id / f"{meta.agent_id}.log"


def open_run_logger(
    meta: EventMeta,
    *,
    logs_dir: Path,
    level: str = "INFO",
    console: bool = True,
) -> logging.Logger:
    """
    Logger ``task.<task>.<run_id>.<agent_id>`` writing to the agent's log file
    and, unless ``console`` is off, to stderr. stdout stays free for command output.

    The ``genocchi`` library loggers are routed to the same handlers until
    :func:`close_run_logger`; an agent that reopens its logger gets fresh handlers.
    """
    logger = logging.getLogger(f"task.{meta.task}.{meta.run_id}.{meta.agent_id}")
    close_run_logger(logger)
    logger.setLevel(level.upper())
    logger.propagate = False

    path = run_log_path(logs_dir, meta)
    ensure_dir(path.parent)
    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)
    context = RunContextFilter(meta)

    handlers: list[logging.Handler] = [logging.FileHandler(path, encoding="utf-8")]
    handlers[0].set_name(f"genocchi.run-file:{path.name}")
    if console:
        handlers.append(logging.StreamHandler())
        handlers[-1].set_name(f"genocchi.run-console:{meta.agent_id}")
    for h in handlers:
        h.setLevel(level.upper())
        h.setFormatter(formatter)
        h.addFilter(context)
        logger.addHandler(h)

    library = logging.getLogger(LIBRARY_LOGGER)
    for h in list(library.handlers):
        library.removeHandler(h)
    for h in handlers:
        library.addHandler(h)
    library.setLevel(logger.level)
    library.propagate = False
    return logger


def close_run_logger(logger: logging.Logger) -> None:
    """Detach and close the run's handlers so the log file is complete and unlocked."""
    library = logging.getLogger(LIBRARY_LOGGER)
    for h in list(logger.handlers):
        logger.removeHandler(h)
        if h in library.handlers:
            library.removeHandler(h)
        h.close()
