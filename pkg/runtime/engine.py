from __future__ import annotations

import logging
import os
import traceback
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional

from .common import (
    ArtifactMeta,
    ArtifactStore,
    EventBus,
    EventLog,
    EventMeta,
    RunMeta,
    write_agent_meta,
    write_shared_run_meta,
)
from .config import PlatformConfig, load_platform_config, load_task_config, merge_config
from .logger import close_run_logger, open_run_logger
from .registry import load_entry, resolve_task
from .utils import ensure_dir, utc_now_compact, write_json


@dataclass
class TaskContext:
    task_name: str
    run_id: str
    agent_id: str
    config: dict[str, Any]
    platform: PlatformConfig
    task_dir: Path
    run_dir: Path
    shared_dir: Path
    agent_dir: Path
    work_dir: Path
    logger: logging.Logger
    events: EventBus
    artifacts: ArtifactStore
    is_coordinator: bool
    invocation: dict[str, Any] = field(default_factory=dict)


def _make_run_id() -> str:
    return f"{utc_now_compact()}_{uuid.uuid4().hex[:8]}"


def run_task(
    task_name: str,
    *,
    root_dir: Optional[Path] = None,
    run_id: Optional[str] = None,
    agent_id: Optional[str] = None,
    config_overrides: Optional[dict[str, Any]] = None,
    invocation: Optional[dict[str, Any]] = None,
    environ: Mapping[str, str] = os.environ,
    console: bool = True,
) -> dict[str, Any]:
    """
    Run a task by importing tasks.<task_name>.main and calling run(ctx).

    Errors are written to result.json and the event log, then re-raised so the
    caller can map them to an exit code.
    """
    platform_cfg = load_platform_config(root_dir=root_dir, environ=environ)
    mf = resolve_task(task_name, platform_cfg.root_dir, environ=environ)
    entry = load_entry(mf)

    if run_id is None:
        run_id = environ.get("GENOCCHI_RUN_ID") or _make_run_id()
    if agent_id is None:
        agent_id = environ.get("GENOCCHI_AGENT_ID") or "agent0"
    is_coordinator = environ.get("GENOCCHI_COORDINATOR") == "1" or agent_id == "agent0"

    # Standard run layout:
    # outputs/<task>/<run_id>/
    #   shared/...
    #   agents/<agent_id>/work/...
    run_dir = ensure_dir(platform_cfg.outputs_dir / task_name / run_id)
    shared_dir = ensure_dir(run_dir / "shared")
    agent_dir = ensure_dir(run_dir / "agents" / agent_id)
    work_dir = ensure_dir(agent_dir / "work")

    meta = EventMeta(task=task_name, run_id=run_id, agent_id=agent_id)
    logger = open_run_logger(meta, logs_dir=platform_cfg.logs_dir, level=platform_cfg.log_level, console=console)

    agent_events = EventLog(agent_dir / "events.jsonl", meta=meta)
    shared_events = EventLog(shared_dir / "events.jsonl", meta=meta)
    events = EventBus(agent_log=agent_events, shared_log=shared_events)

    artifacts = ArtifactStore(
        agent_dir=agent_dir,
        shared_dir=shared_dir,
        meta=ArtifactMeta(task=task_name, run_id=run_id, agent_id=agent_id),
    )

    merged_cfg = merge_config(load_task_config(mf.task_dir), config_overrides)

    run_meta = RunMeta(
        task=task_name,
        run_id=run_id,
        root_dir=str(platform_cfg.root_dir),
        agent_id=agent_id,
        started_at=utc_now_compact(),
        coordinator=is_coordinator,
        version=mf.version,
    )
    write_agent_meta(agent_dir, run_meta, config=merged_cfg)
    if is_coordinator:
        write_shared_run_meta(shared_dir, run_meta)

    ctx = TaskContext(
        task_name=task_name,
        run_id=run_id,
        agent_id=agent_id,
        config=merged_cfg,
        platform=platform_cfg,
        task_dir=mf.task_dir,
        run_dir=run_dir,
        shared_dir=shared_dir,
        agent_dir=agent_dir,
        work_dir=work_dir,
        logger=logger,
        events=events,
        artifacts=artifacts,
        is_coordinator=is_coordinator,
        invocation=dict(invocation or {}),
    )

    result_path = agent_dir / "result.json"

    try:
        # Persist the exact request that triggered this run for traceability.
        ctx.artifacts.write_json(
            "work/request.json",
            {
                "task": task_name,
                "run_id": run_id,
                "agent_id": agent_id,
                "config": merged_cfg,
                "config_overrides": config_overrides or {},
                "invocation": invocation or {},
            },
            kind="request",
        )

        ctx.events.emit("task.start", message="task started")
        res = entry(ctx)
        if res is None:
            res = {"status": "ok"}
        if not isinstance(res, dict):
            res = {"status": "ok", "result": res}
        res.setdefault("status", "ok")
        res.setdefault("run_id", run_id)
        res.setdefault("task", task_name)
        res.setdefault("agent_id", agent_id)
        res.setdefault("run_dir", str(run_dir))
        write_json(result_path, res)
        ctx.events.emit("task.end", message="task finished", data={"status": res.get("status")})
        return res
    except Exception as e:
        err = {
            "status": "error",
            "task": task_name,
            "run_id": run_id,
            "agent_id": agent_id,
            "error_type": type(e).__name__,
            "error": str(e),
            "traceback": traceback.format_exc(),
        }
        try:
            write_json(result_path, err)
        except OSError:
            # do not mask the original error
            pass
        logger.error("Task failed: %s", e)
        try:
            ctx.events.emit("task.error", message=str(e), level="ERROR", data={"error_type": type(e).__name__})
        except OSError:
            pass
        raise
    finally:
        close_run_logger(logger)
