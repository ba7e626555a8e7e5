"""
Turning task configuration (YAML defaults merged with command-line flags) into
validated requests. Everything is parsed before anything is computed, so a bad
flag is reported as a ParameterError with nothing written.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping, Optional

from .codec import parse_lambda, parse_scalar, table_to_csv, table_to_json
from .errors import ParameterError
from .exact import is_symbolic
from .families import DEFAULT_PRECISION, Family, FamilySpec, PolyTable, build_table
from .identities.suite import SuiteConfig

FORMATS = ("csv", "json")


@dataclass(frozen=True)
class TableRequest:
    spec: FamilySpec
    precision: int
    fmt: str = "json"

    def build(self) -> PolyTable:
        return build_table(self.spec, self.precision)

    def render(self, table: Optional[PolyTable] = None) -> str:
        return render_table(table or self.build(), self.fmt)


@dataclass(frozen=True)
class EvalRequest:
    spec: FamilySpec
    n: int
    x: Any
    precision: int

    def evaluate(self) -> Any:
        return build_table(self.spec, self.precision).value(self.n, self.x)


def render_table(table: PolyTable, fmt: str) -> str:
    if fmt == "csv":
        return table_to_csv(table)
    if fmt == "json":
        return json.dumps(table_to_json(table), ensure_ascii=False, indent=2) + "\n"
    raise ParameterError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _value(cfg: Mapping[str, Any], key: str, default: Any) -> Any:
    value = cfg.get(key)
    return default if value is None else value


def _int(cfg: Mapping[str, Any], key: str, default: Optional[int] = None) -> Optional[int]:
    value = cfg.get(key)
    if value is None:
        return default
    if isinstance(value, bool):
        raise ParameterError(f"{key}: expected an integer, got {value!r}")
    try:
        return int(str(value).strip())
    except ValueError as e:
        raise ParameterError(f"{key}: expected an integer, got {value!r}") from e


def _scalars(value: Any, key: str) -> Optional[tuple[Any, ...]]:
    if value is None:
        return None
    items = [s for s in value.split(",") if s.strip()] if isinstance(value, str) else list(value)
    if not items:
        raise ParameterError(f"{key}: empty value")
    return tuple(parse_scalar(v) for v in items)


def family_spec(cfg: Mapping[str, Any], *, max_n: int) -> FamilySpec:
    """FamilySpec from ``family``, ``order``, ``lambda``, ``logs``, ``y``, ``p`` and ``ab``."""
    name = cfg.get("family")
    if not name:
        raise ParameterError("a family is required")
    try:
        family = Family(str(name).strip())
    except ValueError as e:
        choices = ", ".join(f.value for f in Family)
        raise ParameterError(f"unknown family {name!r}; choose from {choices}") from e
    aux = None
    y, p = cfg.get("y"), cfg.get("p")
    if y is not None or p is not None:
        aux = (parse_scalar(0 if y is None else y), parse_scalar(1 if p is None else p))
    elif family is Family.TWO_VAR_GENOCCHI:
        raise ParameterError("two-var-genocchi needs --y")
    return FamilySpec(
        family=family,
        order=_int(cfg, "order", 1),
        lam=parse_lambda(_value(cfg, "lambda", "1")),
        logs=_scalars(cfg.get("logs"), "logs"),
        aux=aux,
        ab=_scalars(cfg.get("ab"), "ab"),
        max_n=max_n,
    )


def _precision(cfg: Mapping[str, Any], max_n: int, default_precision: int) -> int:
    precision = _int(cfg, "precision")
    if precision is None:
        return max(default_precision, max_n + 1)
    if precision < 1:
        raise ParameterError("precision must be positive")
    return precision


def table_request(cfg: Mapping[str, Any], *, default_precision: int = DEFAULT_PRECISION) -> TableRequest:
    max_n = _int(cfg, "max_n", 12)
    if max_n < 0:
        raise ParameterError("max_n must be non-negative")
    fmt = str(_value(cfg, "format", "json")).lower()
    if fmt not in FORMATS:
        raise ParameterError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    spec = family_spec(cfg, max_n=max_n)
    return TableRequest(spec, _precision(cfg, max_n, default_precision), fmt)


def eval_request(cfg: Mapping[str, Any], *, default_precision: int = DEFAULT_PRECISION) -> EvalRequest:
    n = _int(cfg, "n")
    if n is None or n < 0:
        raise ParameterError("eval needs a non-negative --n")
    x = parse_scalar(_value(cfg, "x", "0"))
    spec = family_spec(cfg, max_n=n)
    groups = [v for g in (spec.logs, spec.aux, spec.ab) if g for v in g]
    if is_symbolic(spec.lam) or any(is_symbolic(v) for v in (x, *groups)):
        raise ParameterError("eval needs concrete rational parameters; tabulate symbolic lambda instead")
    return EvalRequest(spec, n, x, _precision(cfg, n, default_precision))


def suite_config(cfg: Mapping[str, Any]) -> SuiteConfig:
    return SuiteConfig.from_mapping(cfg)
