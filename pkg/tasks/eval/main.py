from __future__ import annotations

from typing import Any

from genocchi.codec import format_scalar, serialize_scalar, spec_to_json
from genocchi.requests import eval_request


def run(ctx: Any) -> dict[str, Any]:
    request = eval_request(ctx.config, default_precision=ctx.platform.default_precision)
    value = request.evaluate()
    family = request.spec.family.value
    ctx.logger.info("%s row %d at x=%s -> %s", family, request.n, request.x, format_scalar(value))
    payload = {
        "spec": spec_to_json(request.spec),
        "n": request.n,
        "x": serialize_scalar(request.x),
        "value": serialize_scalar(value),
    }
    ctx.artifacts.write_json("value.json", payload, kind="value")
    return {"status": "ok", "value": format_scalar(value), "n": request.n, "x": serialize_scalar(request.x)}
