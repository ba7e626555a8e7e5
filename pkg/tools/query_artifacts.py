from __future__ import annotations

import argparse
import json
from pathlib import Path
from typing import Any, Iterable, Iterator

try:
    from tools.query_events import _iter_jsonl
except ImportError:  # run as a script from tools/
    from query_events import _iter_jsonl  # type: ignore[no-redef]


def iter_index_files(
    outputs: Path, *, task: str | None = None, run_id: str | None = None, agent: str | None = None
) -> Iterator[Path]:
    for task_dir in sorted(p for p in outputs.iterdir() if p.is_dir()):
        if task and task_dir.name != task:
            continue
        for run_dir in sorted(p for p in task_dir.iterdir() if p.is_dir()):
            if run_id and run_dir.name != run_id:
                continue
            for f in sorted(run_dir.glob("agents/*/index.jsonl")):
                if agent and f.parent.name != agent:
                    continue
                yield f


def select(records: Iterable[dict[str, Any]], *, kind: str | None, scope: str | None) -> Iterator[dict[str, Any]]:
    for rec in records:
        if kind and rec.get("kind") != kind:
            continue
        if scope and rec.get("scope") != scope:
            continue
        yield rec


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description="Query the artifact index (index.jsonl) across outputs/")
    p.add_argument("--root", default=".", help="Project root (default: .)")
    p.add_argument("--task", default=None, help="Filter by task name")
    p.add_argument("--run-id", default=None, help="Filter by run id")
    p.add_argument("--agent", default=None, help="Filter by agent id")
    p.add_argument("--kind", default=None, help="request, table, value or report")
    p.add_argument("--scope", default=None, help="agent, shared or export")
    p.add_argument("--limit", type=int, default=50, help="Max records to print (default: 50)")
    args = p.parse_args(argv)

    outputs = Path(args.root).resolve() / "outputs"
    if not outputs.exists():
        print(f"outputs not found: {outputs}")
        return 2

    count = 0
    for f in iter_index_files(outputs, task=args.task, run_id=args.run_id, agent=args.agent):
        for rec in select(_iter_jsonl(f), kind=args.kind, scope=args.scope):
            print(json.dumps(rec, ensure_ascii=False))
            count += 1
            if count >= args.limit:
                return 0
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
