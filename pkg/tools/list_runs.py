from __future__ import annotations

import argparse
import json
from pathlib import Path
from typing import Any


def _read_json(path: Path) -> dict[str, Any]:
    return json.loads(path.read_text(encoding="utf-8"))


def collect_runs(outputs: Path, task: str | None = None) -> list[tuple[str, str, str, str]]:
    """(task, run_id, agent, status) for every agent directory under outputs/."""
    tasks = [outputs / task] if task else [p for p in outputs.iterdir() if p.is_dir()]
    rows: list[tuple[str, str, str, str]] = []
    for task_dir in sorted(tasks):
        if not task_dir.exists():
            continue
        for run_dir in sorted(p for p in task_dir.iterdir() if p.is_dir()):
            agents_dir = run_dir / "agents"
            if not agents_dir.exists():
                continue
            for agent_dir in sorted(p for p in agents_dir.iterdir() if p.is_dir()):
                result = agent_dir / "result.json"
                status = "-"
                if result.exists():
                    try:
                        status = str(_read_json(result).get("status", "-"))
                    except ValueError:
                        status = "bad-json"
                rows.append((task_dir.name, run_dir.name, agent_dir.name, status))
    return rows


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description="List runs under outputs/")
    p.add_argument("--root", default=".", help="Project root (default: .)")
    p.add_argument("--task", default=None, help="Filter by task name (table, eval, verify)")
    p.add_argument("--status", default=None, help="Filter by result status (ok, failed, error)")
    args = p.parse_args(argv)

    outputs = Path(args.root).resolve() / "outputs"
    if not outputs.exists():
        print(f"outputs not found: {outputs}")
        return 2

    rows = [r for r in collect_runs(outputs, args.task) if args.status is None or r[3] == args.status]
    if not rows:
        print("(no runs found)")
        return 0

    w1 = max(len("task"), *(len(r[0]) for r in rows))
    w2 = max(len("run_id"), *(len(r[1]) for r in rows))
    w3 = max(len("agent"), *(len(r[2]) for r in rows))
    print(f"{'task'.ljust(w1)}  {'run_id'.ljust(w2)}  {'agent'.ljust(w3)}  status")
    for t, r, a, st in rows:
        print(f"{t.ljust(w1)}  {r.ljust(w2)}  {a.ljust(w3)}  {st}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
