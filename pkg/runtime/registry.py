from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .utils import add_sys_path


@dataclass(frozen=True)
class TaskManifest:
    name: str
    version: str
    description: str
    entry: str  # e.g. "main:run"
    task_dir: Path
    project_root: Path
    outputs: tuple[str, ...] = ()


def _iter_task_roots(project_root: Path, *, environ: Mapping[str, str] = os.environ) -> list[Path]:
    """
    Task roots are project-like folders that contain a `tasks/` package.

    - Always include project_root
    - Optionally include extra roots from GENOCCHI_TASK_PATHS (os.pathsep-separated)
    """
    roots = [project_root.resolve()]
    extra = environ.get("GENOCCHI_TASK_PATHS", "").strip()
    if extra:
        for item in extra.split(os.pathsep):
            item = item.strip().strip('"')
            if not item:
                continue
            p = Path(item).expanduser().resolve()
            if p not in roots:
                roots.append(p)
    return roots


def _load_manifest(path: Path) -> dict[str, Any]:
    return json.loads(path.read_text(encoding="utf-8"))


def discover_tasks(project_root: Path, *, environ: Mapping[str, str] = os.environ) -> list[TaskManifest]:
    """
    A discoverable task is a folder `<root>/tasks/<name>/` with `task.json`.
    First name wins across roots; broken manifests are skipped.
    """
    manifests: list[TaskManifest] = []
    seen: set[str] = set()
    for root in _iter_task_roots(project_root, environ=environ):
        tasks_dir = root / "tasks"
        if not tasks_dir.exists():
            continue
        for d in sorted(p for p in tasks_dir.iterdir() if p.is_dir()):
            mf = d / "task.json"
            if not mf.exists():
                continue
            try:
                data = _load_manifest(mf)
                name = str(data.get("name") or d.name)
                if name in seen:
                    continue
                manifests.append(
                    TaskManifest(
                        name=name,
                        version=str(data.get("version") or "0.0.0"),
                        description=str(data.get("description") or ""),
                        entry=str(data.get("entry") or "main:run"),
                        task_dir=d,
                        project_root=root,
                        outputs=tuple(str(o) for o in data.get("outputs") or ()),
                    )
                )
                seen.add(name)
            except (OSError, ValueError, AttributeError, TypeError):
                # validate_task surfaces broken manifests
                continue
    return manifests


def resolve_task(task_name: str, project_root: Path, *, environ: Mapping[str, str] = os.environ) -> TaskManifest:
    for mf in discover_tasks(project_root, environ=environ):
        if mf.name == task_name:
            return mf
    raise FileNotFoundError(f"Task manifest not found for task={task_name!r} under task roots")


def split_entry(mf: TaskManifest) -> tuple[str, str]:
    if ":" not in mf.entry:
        raise ValueError(f"Invalid entry format (expected module:function): {mf.entry}")
    mod_rel, fn = (s.strip() for s in mf.entry.split(":", 1))
    if not mod_rel or not fn:
        raise ValueError(f"Invalid entry format (expected module:function): {mf.entry}")
    return f"tasks.{mf.task_dir.name}.{mod_rel}", fn


def load_entry(mf: TaskManifest) -> Any:
    """Import the task module and return its entry callable."""
    add_sys_path(mf.project_root)
    module_name, fn = split_entry(mf)
    mod = __import__(module_name, fromlist=[fn])
    if not hasattr(mod, fn):
        raise AttributeError(f"Missing entry function {fn!r} in {module_name}")
    entry = getattr(mod, fn)
    if not callable(entry):
        raise TypeError(f"Entry {module_name}:{fn} is not callable")
    return entry


def validate_task(task_name: str, project_root: Path, *, environ: Mapping[str, str] = os.environ) -> None:
    """Validate that a task can be imported and has the declared entrypoint."""
    load_entry(resolve_task(task_name, project_root, environ=environ))
