from __future__ import annotations

import argparse
import json
from pathlib import Path
from typing import Any, Iterable, Iterator


def _iter_jsonl(path: Path) -> Iterable[dict[str, Any]]:
    for line in path.read_text(encoding="utf-8", errors="replace").splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            yield json.loads(line)
        except ValueError:
            continue


def iter_event_files(
    outputs: Path, *, task: str | None = None, run_id: str | None = None, agent: str | None = None
) -> Iterator[Path]:
    # agent-private logs only; the shared log mirrors a subset of them
    for task_dir in sorted(p for p in outputs.iterdir() if p.is_dir()):
        if task and task_dir.name != task:
            continue
        for run_dir in sorted(p for p in task_dir.iterdir() if p.is_dir()):
            if run_id and run_dir.name != run_id:
                continue
            agents_dir = run_dir / "agents"
            if not agents_dir.exists():
                continue
            for agent_dir in sorted(p for p in agents_dir.iterdir() if p.is_dir()):
                if agent and agent_dir.name != agent:
                    continue
                f = agent_dir / "events.jsonl"
                if f.exists():
                    yield f


def matches(rec: dict[str, Any], args: argparse.Namespace) -> bool:
    if args.event and rec.get("event") != args.event:
        return False
    data = rec.get("data") or {}
    if args.id and data.get("id") != args.id:
        return False
    if args.status and data.get("status") != args.status:
        return False
    if args.contains and args.contains not in json.dumps(rec, ensure_ascii=False):
        return False
    return True


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description="Query events.jsonl across outputs/")
    p.add_argument("--root", default=".", help="Project root (default: .)")
    p.add_argument("--task", default=None, help="Filter by task name")
    p.add_argument("--run-id", default=None, help="Filter by run id")
    p.add_argument("--agent", default=None, help="Filter by agent id")
    p.add_argument("--event", default=None, help="Filter by event name (exact match), e.g. identity.result")
    p.add_argument("--id", default=None, help="identity.result: filter by identity id, e.g. T2_9")
    p.add_argument("--status", default=None, help="identity.result: pass, fail or documented_discrepancy")
    p.add_argument("--contains", default=None, help="Substring filter over JSON text")
    p.add_argument("--limit", type=int, default=50, help="Max events to print (default: 50)")
    args = p.parse_args(argv)

    outputs = Path(args.root).resolve() / "outputs"
    if not outputs.exists():
        print(f"outputs not found: {outputs}")
        return 2

    count = 0
    for f in iter_event_files(outputs, task=args.task, run_id=args.run_id, agent=args.agent):
        for rec in _iter_jsonl(f):
            if not matches(rec, args):
                continue
            print(json.dumps(rec, ensure_ascii=False))
            count += 1
            if count >= args.limit:
                return 0
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
