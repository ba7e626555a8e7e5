from __future__ import annotations

from pathlib import Path
from typing import Any

from genocchi.codec import spec_to_json
from genocchi.requests import table_request


def run(ctx: Any) -> dict[str, Any]:
    request = table_request(ctx.config, default_precision=ctx.platform.default_precision)
    spec = request.spec
    ctx.logger.info(
        "tabulating %s order=%s max_n=%s precision=%s",
        spec.family.value,
        spec.order,
        spec.max_n,
        request.precision,
    )
    table = request.build()
    text = request.render(table)
    data = text.encode("utf-8")

    artifact = ctx.artifacts.write_bytes(f"table.{request.fmt}", data, kind="table")
    output = ctx.config.get("output")
    written = ctx.artifacts.export(Path(output), data, kind="table") if output else artifact

    ctx.events.emit(
        "table.written",
        message=f"{spec.family.value} rows 0..{spec.max_n}",
        data={
            "path": str(written),
            "format": request.fmt,
            "rows": len(table.rows),
            "spec": spec_to_json(spec),
        },
    )
    return {
        "status": "ok",
        "family": spec.family.value,
        "format": request.fmt,
        "rows": len(table.rows),
        "artifact": str(artifact),
        "output": str(written),
    }
