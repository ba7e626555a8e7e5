"""
Text encodings of scalars, polynomials and tables.

Rationals are written as "p/q" (or "p" when integral); a RatFun is written as
{"num": [...], "den": [...]} with ascending lambda coefficients; an XPoly as the
list of its encoded coefficients. Symbolic lambda itself is "symbolic".
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional

from .errors import ParameterError
from .exact import LAMBDA, RatFun, XPoly, is_lambda_generator, ratfun_normalize
from .families import Family, FamilySpec, PolyTable
from .series import Series, egf_coeff


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParameterError(f"not a rational number: {text!r}") from e


def serialize_scalar(value: Any) -> Any:
    if isinstance(value, RatFun):
        return {
            "num": [format_rational(c) for c in value.num],
            "den": [format_rational(c) for c in value.den],
        }
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    raise TypeError(f"cannot encode {type(value).__name__}")


def parse_scalar(obj: Any) -> Any:
    if isinstance(obj, Mapping):
        try:
            num = [parse_rational(c) for c in obj["num"]]
            den = [parse_rational(c) for c in obj["den"]]
            return ratfun_normalize(num, den)
        except KeyError as e:
            raise ParameterError(f"rational function needs num and den: {obj!r}") from e
        except ZeroDivisionError as e:
            raise ParameterError("rational function with zero denominator") from e
    if isinstance(obj, bool):
        raise ParameterError("booleans are not scalars")
    if isinstance(obj, int):
        return Fraction(obj)
    return parse_rational(obj)


def serialize_xpoly(poly: XPoly) -> list[Any]:
    return [serialize_scalar(c) for c in poly.coeffs]


def parse_xpoly(obj: Iterable[Any]) -> XPoly:
    return XPoly(parse_scalar(c) for c in obj)


def serialize_lambda(lam: Any) -> Any:
    if is_lambda_generator(lam):
        return "symbolic"
    return serialize_scalar(lam)


def parse_lambda(obj: Any) -> Any:
    """Accepts "symbolic" (or "lambda"), a rational literal, or an encoded RatFun."""
    if isinstance(obj, str) and obj.strip().lower() in ("symbolic", "lambda", "lam"):
        return LAMBDA
    return parse_scalar(obj)


def _encode_group(values: Optional[tuple[Any, ...]]) -> Optional[list[Any]]:
    return None if values is None else [serialize_scalar(v) for v in values]


def _decode_group(values: Any) -> Optional[tuple[Any, ...]]:
    return None if values is None else tuple(parse_scalar(v) for v in values)


def spec_to_json(spec: FamilySpec) -> dict[str, Any]:
    return {
        "family": spec.family.value,
        "order": spec.order,
        "lambda": serialize_lambda(spec.lam),
        "logs": _encode_group(spec.logs),
        "aux": _encode_group(spec.aux),
        "ab": _encode_group(spec.ab),
        "max_n": spec.max_n,
    }


def spec_from_json(obj: Mapping[str, Any]) -> FamilySpec:
    try:
        family = Family(obj["family"])
    except (KeyError, ValueError) as e:
        raise ParameterError(f"bad family in {obj!r}") from e
    return FamilySpec(
        family=family,
        order=int(obj.get("order", 1)),
        lam=parse_lambda(obj.get("lambda", "1")),
        logs=_decode_group(obj.get("logs")),
        aux=_decode_group(obj.get("aux")),
        ab=_decode_group(obj.get("ab")),
        max_n=int(obj.get("max_n", 0)),
    )


def table_to_json(table: PolyTable) -> dict[str, Any]:
    return {
        "spec": spec_to_json(table.spec),
        "precision": table.precision,
        "rows": [{"n": n, "coeffs": serialize_xpoly(r)} for n, r in enumerate(table.rows)],
    }


def table_from_json(obj: Mapping[str, Any]) -> PolyTable:
    rows = tuple(parse_xpoly(r["coeffs"]) for r in obj["rows"])
    return PolyTable(spec_from_json(obj["spec"]), rows, int(obj.get("precision", len(rows))))


def _csv_cell(value: Any) -> str:
    encoded = serialize_scalar(value)
    if isinstance(encoded, str):
        return encoded
    return json.dumps(encoded, separators=(",", ":"))


def table_to_csv(table: PolyTable) -> str:
    """One line per n: ``n,c_0,c_1,...`` with ascending powers of x."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    width = max((len(r.coeffs) for r in table.rows), default=0)
    writer.writerow(["n"] + [f"x^{j}" for j in range(width)])
    for n, r in enumerate(table.rows):
        writer.writerow([n] + [_csv_cell(c) for c in r.coeffs])
    return buf.getvalue()


def table_from_csv(text: str, spec: FamilySpec, precision: int) -> PolyTable:
    reader = csv.reader(io.StringIO(text))
    next(reader, None)
    rows = []
    for record in reader:
        cells = record[1:]
        rows.append(XPoly(parse_scalar(json.loads(c) if c.startswith("{") else c) for c in cells))
    return PolyTable(spec, tuple(rows), precision)


def serialize_value(value: Any) -> Any:
    """Scalars, XPolys and plain containers of them, for JSON reports."""
    if isinstance(value, XPoly):
        return serialize_xpoly(value)
    if isinstance(value, (Fraction, RatFun)):
        return serialize_scalar(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Mapping):
        return {str(k): serialize_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize_value(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def format_scalar(value: Any) -> str:
    """Human-readable one-liner, used by the eval command."""
    if isinstance(value, RatFun):
        const = value.constant_value()
        return format_rational(const) if const is not None else str(value)
    return format_rational(value)


def serialize_series(series: Series) -> dict[str, Any]:
    return {"precision": series.precision, "coeffs": [serialize_value(c) for c in series.coeffs]}


def egf_table_rows(series: Series, count: Optional[int] = None) -> list[tuple[int, Any]]:
    """(n, n! [t^n]) pairs for n < count (default: the whole precision)."""
    count = series.precision if count is None else count
    return [(n, egf_coeff(series, n)) for n in range(count)]
