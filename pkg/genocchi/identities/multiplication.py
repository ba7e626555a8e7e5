"""Multiplication formulas: G(mx) expressed through shifted values at lambda^m."""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Optional

from ..exact import XPoly, as_exact, compositions, multinomial
from .base import (
    IdentityResult,
    apostol_bernoulli,
    apostol_genocchi,
    make_result,
    require_even,
    require_non_negative,
    require_odd,
    resolve_precision,
    two_var,
)


def _composition_weights(l: int, m: int) -> dict[int, int]:
    """r -> sum of multinomial(l; v) over compositions v of l into m parts with weight r."""
    weights: dict[int, int] = {}
    for v in compositions(l, m):
        r = sum(i * vi for i, vi in enumerate(v))
        weights[r] = weights.get(r, 0) + multinomial(l, v)
    return weights


def _shifted_sum(row: XPoly, l: int, m: int, lam: Any) -> XPoly:
    """sum over v of multinomial(l; v) (-lam)^r row(x + r/m)."""
    terms = [
        row.shift(Fraction(r, m)) * ((-lam) ** r * w)
        for r, w in sorted(_composition_weights(l, m).items())
    ]
    return XPoly.total(terms)


def check_T2_1(
    n: int,
    l: int,
    m: int,
    lam: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
    identity_id: str = "T2_1",
) -> IdentityResult:
    """G_n^(l)(m x; lam) = m^(n-l) sum_v multinomial (-lam)^r G_n^(l)(x + r/m; lam^m), m odd."""
    require_odd(m)
    require_non_negative(n=n, l=l)
    lam = as_exact(lam)
    precision = resolve_precision(precision, n)
    lhs = apostol_genocchi(l, lam, precision).row(n).scale_x(m)
    row_m = apostol_genocchi(l, lam, precision, power=m).row(n)
    rhs = _shifted_sum(row_m, l, m, lam) * Fraction(m) ** (n - l)
    params = {"n": n, "l": l, "m": m, "lambda": lam}
    return make_result(identity_id, params, lhs - rhs, expected_failures)


def check_C2_2(n: int, l: int, m: int, **kwargs: Any) -> IdentityResult:
    return check_T2_1(n, l, m, Fraction(1), identity_id="C2_2", **kwargs)


def check_C2_3(n: int, m: int, **kwargs: Any) -> IdentityResult:
    return check_T2_1(n, 1, m, Fraction(1), identity_id="C2_3", **kwargs)


def check_T2_4(
    n: int,
    l: int,
    m: int,
    lam: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
    identity_id: str = "T2_4",
) -> IdentityResult:
    """G_n^(l)(m x; lam) = (-2)^l m^(n-l) sum_v multinomial (-lam)^r B_n^(l)(x + r/m; lam^m), m even."""
    require_even(m)
    require_non_negative(n=n, l=l)
    lam = as_exact(lam)
    precision = resolve_precision(precision, n)
    lhs = apostol_genocchi(l, lam, precision).row(n).scale_x(m)
    row_m = apostol_bernoulli(l, lam, precision, power=m).row(n)
    rhs = _shifted_sum(row_m, l, m, lam) * ((-2) ** l * Fraction(m) ** (n - l))
    params = {"n": n, "l": l, "m": m, "lambda": lam}
    return make_result(identity_id, params, lhs - rhs, expected_failures)


def check_C2_5(n: int, l: int, m: int, **kwargs: Any) -> IdentityResult:
    return check_T2_4(n, l, m, Fraction(1), identity_id="C2_5", **kwargs)


def check_C2_6(n: int, m: int, **kwargs: Any) -> IdentityResult:
    return check_T2_4(n, 1, m, Fraction(1), identity_id="C2_6", **kwargs)


def check_T4_1(
    n: int,
    m: int,
    lam: Any,
    y: Any,
    p: Any = 1,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
) -> IdentityResult:
    """
    G_n(m x, p y; lam) = m^(n-1) sum_{k<m} (-lam)^k G_n(x + k/m, p y / m^2; lam^m), m odd.

    Both sides use the kernel 2t e^{xt + y t^2} / (lam e^t + 1).
    """
    require_odd(m)
    require_non_negative(n=n)
    lam, y, p = as_exact(lam), as_exact(y), as_exact(p)
    precision = resolve_precision(precision, n)
    lhs = two_var(lam, p * y, precision).row(n).scale_x(m)
    row_m = two_var(lam, p * y / m**2, precision, power=m).row(n)
    rhs = XPoly.total([row_m.shift(Fraction(k, m)) * (-lam) ** k for k in range(m)]) * Fraction(m) ** (n - 1)
    params = {"n": n, "m": m, "lambda": lam, "y": y, "p": p}
    return make_result("T4_1", params, lhs - rhs, expected_failures)


def check_R4_2(
    n: int,
    m: int,
    lam: Any,
    y: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
) -> IdentityResult:
    """G_n(m x, m^2 y; lam) = m^(n-1) sum_{k<m} (-lam)^k G_n(x + k/m, y; lam^m), m odd."""
    require_odd(m)
    require_non_negative(n=n)
    lam, y = as_exact(lam), as_exact(y)
    precision = resolve_precision(precision, n)
    lhs = two_var(lam, y * m**2, precision).row(n).scale_x(m)
    row_m = two_var(lam, y, precision, power=m).row(n)
    rhs = XPoly.total([row_m.shift(Fraction(k, m)) * (-lam) ** k for k in range(m)]) * Fraction(m) ** (n - 1)
    params = {"n": n, "m": m, "lambda": lam, "y": y}
    return make_result("R4_2", params, lhs - rhs, expected_failures)
