"""
Identities of the (a, b, c)-parametrised families.

Parameters are passed as logarithms: La = ln a, Lb = ln b, Lc = ln c, all
rational, so a^t = e^{La t} stays inside exact series arithmetic.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional

from ..errors import ParameterError
from ..exact import XPoly, as_exact, binomial
from ..families import Family, FamilySpec, lambda_power_table
from .base import (
    IdentityResult,
    apostol_genocchi,
    euler_plain,
    genocchi_abc,
    genocchi_plain,
    make_result,
    require_non_negative,
    resolve_precision,
)

Logs = tuple[Any, Any, Any]


def _logs(la: Any, lb: Any, lc: Any) -> Logs:
    return (as_exact(la), as_exact(lb), as_exact(lc))


def _shifted_logs(logs: Logs) -> Logs:
    """(a, b, c) -> (a/c, b/c, c)."""
    la, lb, lc = logs
    return (la - lc, lb - lc, lc)


def _params(n: int, l: int, lam: Any, logs: Logs, **extra: Any) -> dict[str, Any]:
    out: dict[str, Any] = {"n": n, "l": l, "lambda": lam, "logs": logs}
    out.update(extra)
    return out


def check_T3_1(
    n: int,
    l: int,
    lam: Any,
    la: Any,
    lb: Any,
    lc: Any = 1,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
) -> IdentityResult:
    """G_n^(l)(a, b; lam) = (Lb - La)^(n-l) G_n^(l)(l La / (La - Lb); lam)."""
    require_non_negative(n=n, l=l)
    lam, logs = as_exact(lam), _logs(la, lb, lc)
    la, lb, _ = logs
    if la == lb:
        raise ParameterError("ln a = ln b is not allowed")
    precision = resolve_precision(precision, n)
    lhs = genocchi_abc(l, lam, logs, precision).number(n)
    point = l * la / (la - lb)
    rhs = apostol_genocchi(l, lam, precision).row(n).evaluate(point) * (lb - la) ** (n - l)
    return make_result("T3_1", _params(n, l, lam, logs), lhs - rhs, expected_failures)


def check_T3_2(
    n: int,
    l: int,
    lam: Any,
    la: Any,
    lb: Any,
    lc: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
) -> IdentityResult:
    """G_n^(l)(x; a, b, c; lam) = (Lb - La)^(n-l) G_n^(l)((Lc x - l La) / (Lb - La); lam)."""
    require_non_negative(n=n, l=l)
    lam, logs = as_exact(lam), _logs(la, lb, lc)
    la, lb, lc = logs
    if la == lb:
        raise ParameterError("ln a = ln b is not allowed")
    precision = resolve_precision(precision, n)
    d = lb - la
    lhs = genocchi_abc(l, lam, logs, precision).row(n)
    rhs = apostol_genocchi(l, lam, precision).row(n).compose_affine(lc / d, -l * la / d) * d ** (n - l)
    return make_result("T3_2", _params(n, l, lam, logs), lhs - rhs, expected_failures)


def _variant_shift_one(
    n: int, l: int, lam: Any, logs: Logs, *, precision: int, **_: Any
) -> tuple[XPoly, XPoly, dict]:
    """G_n(x + 1) = sum_k C(n, k) Lc^(n-k) G_k(x)."""
    lc = logs[2]
    table = genocchi_abc(l, lam, logs, precision)
    lhs = table.row(n).shift(1)
    rhs = XPoly.total([table.row(k) * (binomial(n, k) * lc ** (n - k)) for k in range(n + 1)])
    return lhs, rhs, {}


def _variant_shift_order(
    n: int, l: int, lam: Any, logs: Logs, *, precision: int, **_: Any
) -> tuple[XPoly, XPoly, dict]:
    """G_n(x + l; a, b, c) = G_n(x; a/c, b/c, c)."""
    lhs = genocchi_abc(l, lam, logs, precision).row(n).shift(l)
    rhs = genocchi_abc(l, lam, _shifted_logs(logs), precision).row(n)
    return lhs, rhs, {}


def _variant_reflect(
    n: int, l: int, lam: Any, logs: Logs, *, precision: int, **_: Any
) -> tuple[XPoly, XPoly, dict]:
    """G_n(l - x; a, b, c) = G_n(-x; a/c, b/c, c)."""
    lhs = genocchi_abc(l, lam, logs, precision).row(n).compose_affine(-1, l)
    rhs = genocchi_abc(l, lam, _shifted_logs(logs), precision).row(n).reflect()
    return lhs, rhs, {}


def _variant_order_sum(
    n: int, l: int, lam: Any, logs: Logs, *, precision: int, beta: int = 1, y: Any = 0, **_: Any
) -> tuple[XPoly, XPoly, dict]:
    """G_n^(l+beta)(x + y) = sum_r C(n, r) G_{n-r}^(l)(x) G_r^(beta)(y)."""
    if beta < 0:
        raise ParameterError("beta must be non-negative")
    y = as_exact(y)
    joint = genocchi_abc(l + beta, lam, logs, precision)
    first = genocchi_abc(l, lam, logs, precision)
    second = genocchi_abc(beta, lam, logs, precision)
    lhs = joint.row(n).shift(y)
    rhs = XPoly.total([first.row(n - r) * (binomial(n, r) * second.row(r).evaluate(y)) for r in range(n + 1)])
    return lhs, rhs, {"beta": beta, "y": y}


def _variant_derivative(
    n: int, l: int, lam: Any, logs: Logs, *, precision: int, ell: int = 1, **_: Any
) -> tuple[XPoly, XPoly, dict]:
    """d^ell/dx^ell G_n(x) = n!/(n-ell)! Lc^ell G_{n-ell}(x); zero once ell > n."""
    if ell < 0:
        raise ParameterError("derivative order must be non-negative")
    table = genocchi_abc(l, lam, logs, precision)
    lhs = table.row(n).derivative(ell)
    if ell > n:
        rhs = XPoly()
    else:
        factor = Fraction(math.factorial(n), math.factorial(n - ell))
        rhs = table.row(n - ell) * (factor * logs[2] ** ell)
    return lhs, rhs, {"ell": ell}


def _variant_integral(
    n: int, l: int, lam: Any, logs: Logs, *, precision: int, s: Any = 0, t: Any = 1, **_: Any
) -> tuple[XPoly, XPoly, dict]:
    """int_s^t G_n(x) dx = (G_{n+1}(t) - G_{n+1}(s)) / ((n+1) Lc)."""
    lc = logs[2]
    if not lc:
        raise ParameterError("the integral relation needs ln c != 0")
    s, t = as_exact(s), as_exact(t)
    table = genocchi_abc(l, lam, logs, precision)
    lhs = table.row(n).definite_integral(s, t)
    rhs = (table.row(n + 1).evaluate(t) - table.row(n + 1).evaluate(s)) / ((n + 1) * lc)
    return XPoly.constant(lhs), XPoly.constant(rhs), {"s": s, "t": t}


_T3_3_VARIANTS: dict[int, Callable[..., tuple[XPoly, XPoly, dict]]] = {
    1: _variant_shift_one,
    2: _variant_shift_order,
    3: _variant_reflect,
    4: _variant_order_sum,
    5: _variant_derivative,
    6: _variant_integral,
}


def check_T3_3(
    variant: int,
    n: int,
    l: int,
    lam: Any,
    la: Any,
    lb: Any,
    lc: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
    **extra: Any,
) -> IdentityResult:
    """
    One of the six (a, b, c) transformation rules. ``extra`` carries beta and y
    for variant 4, ell for variant 5 and the endpoints s, t for variant 6.
    """
    fn = _T3_3_VARIANTS.get(variant)
    if fn is None:
        raise ParameterError(f"unknown variant {variant}; expected 1..6")
    require_non_negative(n=n, l=l)
    lam, logs = as_exact(lam), _logs(la, lb, lc)
    needed = n + 1 if variant == 6 else n
    precision = resolve_precision(precision, needed)
    lhs, rhs, used = fn(n, l, lam, logs, precision=precision, **extra)
    identity_id = f"T3_3_{variant}"
    return make_result(identity_id, _params(n, l, lam, logs, **used), lhs - rhs, expected_failures)


def check_R3_4(
    form: str,
    n: int,
    l: int,
    lam: Any,
    la: Any,
    lb: Any,
    lc: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
) -> IdentityResult:
    """
    Order-raising relation between orders l and l+1.

    printed:   l lam (Lb - La) sum_k C(n, k) Lb^k G_{n-k}^(l+1)
                   = (l - n) G_n^(l) + n (x Lc - l La) G_{n-1}^(l)
    corrected: l (Lb - La) / 2 sum_k C(n, k) La^(n-k) G_k^(l+1)
                   = (n - l) G_n^(l) - n (x Lc - l Lb) G_{n-1}^(l)

    The corrected form is the coefficient identity of t d/dt applied to the
    generating function.
    """
    if form not in ("printed", "corrected"):
        raise ParameterError(f"form must be 'printed' or 'corrected', got {form!r}")
    if l < 1:
        raise ParameterError("the order-raising relation needs l >= 1")
    require_non_negative(n=n)
    lam, logs = as_exact(lam), _logs(la, lb, lc)
    la, lb, lc = logs
    precision = resolve_precision(precision, n)
    base = genocchi_abc(l, lam, logs, precision)
    raised = genocchi_abc(l + 1, lam, logs, precision)
    x = XPoly.x()
    if form == "printed":
        lhs = XPoly.total(
            [raised.row(n - k) * (binomial(n, k) * lb**k) for k in range(n + 1)]
        ) * (lam * (l * (lb - la)))
        rhs = base.row(n) * (l - n)
        if n:
            rhs = rhs + (x * lc - l * la) * base.row(n - 1) * n
    else:
        lhs = XPoly.total(
            [raised.row(k) * (binomial(n, k) * la ** (n - k)) for k in range(n + 1)]
        ) * (l * (lb - la) / 2)
        rhs = base.row(n) * (n - l)
        if n:
            rhs = rhs - (x * lc - l * lb) * base.row(n - 1) * n
    return make_result(f"R3_4_{form}", _params(n, l, lam, logs), lhs - rhs, expected_failures)


def check_R3_5_1(
    n: int,
    y: Any,
    la: Any,
    lb: Any,
    lc: Any = 1,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
) -> IdentityResult:
    """
    B_n(x + y; a, b) = 1/2 sum_k C(n, k) / (n-k+1) [B_k(y; a, b) + B_k(y+1; a, b)] G_{n-k}(x),

    with B_n(x; a, b) read as the (a, b, c)-Bernoulli polynomial at ln c = lc (default 1).
    """
    require_non_negative(n=n)
    y, logs = as_exact(y), _logs(la, lb, lc)
    precision = resolve_precision(precision, n)
    spec = FamilySpec(Family.LUO_BERNOULLI_ABC, logs=logs, max_n=precision - 1)
    bern = lambda_power_table(spec, 1, precision)
    genocchi = genocchi_plain(precision)
    lhs = bern.row(n).shift(y)
    rhs = XPoly.total(
        [
            genocchi.row(n - k)
            * (Fraction(binomial(n, k), n - k + 1) * (bern.row(k).evaluate(y) + bern.row(k).evaluate(y + 1)))
            for k in range(n + 1)
        ]
    ) * Fraction(1, 2)
    params = {"n": n, "y": y, "logs": logs}
    return make_result("R3_5_1", params, lhs - rhs, expected_failures)


def check_R3_5_2(
    n: int,
    y: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
) -> IdentityResult:
    """G_n(x + y) = 1/2 sum_k C(n, k) [G_k(y) + G_k(y+1)] E_{n-k}(x)."""
    require_non_negative(n=n)
    y = as_exact(y)
    precision = resolve_precision(precision, n)
    genocchi = genocchi_plain(precision)
    euler = euler_plain(precision)
    lhs = genocchi.row(n).shift(y)
    rhs = XPoly.total(
        [
            euler.row(n - k) * (binomial(n, k) * (genocchi.row(k).evaluate(y) + genocchi.row(k).evaluate(y + 1)))
            for k in range(n + 1)
        ]
    ) * Fraction(1, 2)
    return make_result("R3_5_2", {"n": n, "y": y}, lhs - rhs, expected_failures)


def check_R3_5_3(
    n: int,
    y: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
) -> IdentityResult:
    """G_n(x + y) = sum_k k C(n, k) y^(k-1) E_{n-k}(x), y != 0."""
    require_non_negative(n=n)
    y = as_exact(y)
    if not y:
        raise ParameterError("this identity requires y != 0")
    precision = resolve_precision(precision, n)
    lhs = genocchi_plain(precision).row(n).shift(y)
    euler = euler_plain(precision)
    rhs = XPoly.total([euler.row(n - k) * (k * binomial(n, k) * y ** (k - 1)) for k in range(1, n + 1)])
    return make_result("R3_5_3", {"n": n, "y": y}, lhs - rhs, expected_failures)


def check_R3_5(identity: int, n: int, y: Any, **kwargs: Any) -> IdentityResult:
    if identity == 1:
        return check_R3_5_1(n, y, **kwargs)
    if identity == 2:
        return check_R3_5_2(n, y, **kwargs)
    if identity == 3:
        return check_R3_5_3(n, y, **kwargs)
    raise ParameterError(f"unknown identity {identity}; expected 1, 2 or 3")
