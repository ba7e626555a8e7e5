"""Run bookkeeping shared by all tasks: events, artifacts and run metadata."""

from .artifacts import ArtifactMeta, ArtifactStore
from .events import EventBus, EventLog, EventMeta
from .runmeta import RunMeta, write_agent_meta, write_shared_run_meta

__all__ = [
    "ArtifactStore",
    "ArtifactMeta",
    "EventBus",
    "EventLog",
    "EventMeta",
    "RunMeta",
    "write_agent_meta",
    "write_shared_run_meta",
]
