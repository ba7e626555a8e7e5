from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Literal, Optional

from ..utils import dump_json, ensure_dir, write_bytes_atomic

Scope = Literal["agent", "shared"]


def _sha256_bytes(b: bytes) -> str:
    return hashlib.sha256(b).hexdigest()


@dataclass(frozen=True)
class ArtifactMeta:
    task: str
    run_id: str
    agent_id: str


class ArtifactStore:
    """
    Writes artifacts into the agent-private or run-shared directory and keeps
    an append-only ``index.jsonl`` (path, size, sha256, kind) per agent.

    Every file goes through temp file + os.replace.
    """

    def __init__(
        self,
        *,
        agent_dir: Path,
        shared_dir: Path,
        meta: ArtifactMeta,
    ) -> None:
        self.agent_dir = agent_dir
        self.shared_dir = shared_dir
        self.meta = meta
        ensure_dir(self.agent_dir)
        ensure_dir(self.shared_dir)
        self._index_path = self.agent_dir / "index.jsonl"

    def path(self, rel: str, *, scope: Scope = "agent") -> Path:
        base = self.agent_dir if scope == "agent" else self.shared_dir
        return base / rel

    def write_text(
        self,
        rel: str,
        text: str,
        *,
        scope: Scope = "agent",
        kind: Optional[str] = None,
        encoding: str = "utf-8",
    ) -> Path:
        return self.write_bytes(rel, text.encode(encoding), scope=scope, kind=kind)

    def write_json(
        self,
        rel: str,
        data: Any,
        *,
        scope: Scope = "agent",
        kind: Optional[str] = None,
        indent: int = 2,
    ) -> Path:
        return self.write_bytes(rel, dump_json(data, indent=indent).encode("utf-8"), scope=scope, kind=kind)

    def write_bytes(
        self,
        rel: str,
        data: bytes,
        *,
        scope: Scope = "agent",
        kind: Optional[str] = None,
    ) -> Path:
        p = write_bytes_atomic(self.path(rel, scope=scope), data)
        self._record(p, size=len(data), sha256=_sha256_bytes(data), scope=scope, kind=kind)
        return p

    def export(self, target: Path, data: bytes, *, kind: Optional[str] = None) -> Path:
        """Write a user-requested output file outside the run directory and index it."""
        p = write_bytes_atomic(Path(target), data)
        self._record(p, size=len(data), sha256=_sha256_bytes(data), scope="export", kind=kind)
        return p

    def _record(
        self,
        path: Path,
        *,
        size: int,
        sha256: str,
        scope: str,
        kind: Optional[str],
    ) -> dict[str, Any]:
        rec = {
            "task": self.meta.task,
            "run_id": self.meta.run_id,
            "agent_id": self.meta.agent_id,
            "scope": scope,
            "path": str(path),
            "size": size,
            "sha256": sha256,
        }
        if kind:
            rec["kind"] = kind
        with self._index_path.open("a", encoding="utf-8") as f:
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")
        return rec
