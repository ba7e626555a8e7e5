"""
Number recurrences: weighted alternating sums, the odd/even-m recursions linking
lambda and lambda^m, and order lowering.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Optional

from ..errors import ParameterError
from ..exact import as_exact, binomial, exact_sum, rising_factorial, sign
from ..zsums import z_sum_multi
from .base import (
    IdentityResult,
    apostol_bernoulli,
    apostol_genocchi,
    make_result,
    require_even,
    require_non_negative,
    require_odd,
    resolve_precision,
)


def check_T2_7(
    n: int,
    l: int,
    m: int,
    lam: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
    identity_id: str = "T2_7",
) -> IdentityResult:
    """
    Z_n^(l)(m; lam) = 2^-l / (n+1)_l sum_j C(l, j) (-1)^(j(m+1)) lam^(mj+l)
                      sum_k C(n+l, k) G_k^(j)(mj+l; lam) G_{n+l-k}^(l-j)(lam)
    """
    require_non_negative(n=n, l=l, m=m)
    lam = as_exact(lam)
    precision = resolve_precision(precision, n + l)
    lhs = z_sum_multi(n, l, m, lam)
    outer = []
    for j in range(l + 1):
        rows_j = apostol_genocchi(j, lam, precision)
        rows_rest = apostol_genocchi(l - j, lam, precision)
        point = Fraction(m * j + l)
        inner = exact_sum(
            binomial(n + l, k) * rows_j.row(k).evaluate(point) * rows_rest.number(n + l - k)
            for k in range(n + l + 1)
        )
        outer.append(inner * (binomial(l, j) * sign(j * (m + 1))) * lam ** (m * j + l))
    rhs = exact_sum(outer) * Fraction(1, 2**l * rising_factorial(n + 1, l))
    params = {"n": n, "l": l, "m": m, "lambda": lam}
    return make_result(identity_id, params, lhs - rhs, expected_failures)


def check_C2_8(n: int, l: int, m: int, **kwargs: Any) -> IdentityResult:
    return check_T2_7(n, l, m, Fraction(1), identity_id="C2_8", **kwargs)


def check_T2_9(
    n: int,
    l: int,
    m: int,
    lam: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
    identity_id: str = "T2_9",
) -> IdentityResult:
    """
    m^n G_n^(l)(lam^m) - m^l G_n^(l)(lam)
        = (-1)^(l-1) sum_k C(n, k) m^k G_k^(l)(lam^m) Z_{n-k}^(l)(m-1; lam),   m odd.

    As printed this only holds for l = 1 (and trivially for m = 1); larger orders
    leave a residual and are expected failures by default.
    """
    require_odd(m)
    require_non_negative(n=n, l=l)
    lam = as_exact(lam)
    precision = resolve_precision(precision, n)
    at_lam = apostol_genocchi(l, lam, precision)
    at_power = apostol_genocchi(l, lam, precision, power=m)
    lhs = at_power.number(n) * m**n - at_lam.number(n) * m**l
    rhs = exact_sum(
        at_power.number(k) * (binomial(n, k) * m**k) * z_sum_multi(n - k, l, m - 1, lam)
        for k in range(n + 1)
    ) * sign(l - 1)
    params = {"n": n, "l": l, "m": m, "lambda": lam}
    return make_result(identity_id, params, lhs - rhs, expected_failures)


def check_C2_10(n: int, l: int, m: int, **kwargs: Any) -> IdentityResult:
    return check_T2_9(n, l, m, Fraction(1), identity_id="C2_10", **kwargs)


def check_C2_11(n: int, m: int, lam: Any, **kwargs: Any) -> IdentityResult:
    return check_T2_9(n, 1, m, lam, identity_id="C2_11", **kwargs)


def check_C2_12(n: int, m: int, **kwargs: Any) -> IdentityResult:
    return check_T2_9(n, 1, m, Fraction(1), identity_id="C2_12", **kwargs)


def check_T2_13(
    n: int,
    l: int,
    m: int,
    lam: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
    identity_id: str = "T2_13",
) -> IdentityResult:
    """
    m^l G_n^(l)(lam) - (-2)^l m^n B_n^(l)(lam^m)
        = 2^l sum_k C(n, k) m^k B_k^(l)(lam^m) Z_{n-k}^(l)(m-1; lam),   m even.

    Same caveat as the odd-m recursion: exact for l = 1 only.
    """
    require_even(m)
    require_non_negative(n=n, l=l)
    lam = as_exact(lam)
    precision = resolve_precision(precision, n)
    genocchi = apostol_genocchi(l, lam, precision)
    bern_power = apostol_bernoulli(l, lam, precision, power=m)
    lhs = genocchi.number(n) * m**l - bern_power.number(n) * ((-2) ** l * m**n)
    rhs = exact_sum(
        bern_power.number(k) * (binomial(n, k) * m**k) * z_sum_multi(n - k, l, m - 1, lam)
        for k in range(n + 1)
    ) * 2**l
    params = {"n": n, "l": l, "m": m, "lambda": lam}
    return make_result(identity_id, params, lhs - rhs, expected_failures)


def check_C2_14(n: int, l: int, m: int, **kwargs: Any) -> IdentityResult:
    return check_T2_13(n, l, m, Fraction(1), identity_id="C2_14", **kwargs)


def check_T2_15(
    k: int,
    n: int,
    lam: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
) -> IdentityResult:
    """G_k^(n+1)(lam) = 2k G_{k-1}^(n)(lam) - (2 - 2k/n) G_k^(n)(lam)."""
    if n < 1:
        raise ParameterError("order lowering needs n >= 1")
    if k < 1:
        raise ParameterError("order lowering needs k >= 1")
    lam = as_exact(lam)
    precision = resolve_precision(precision, k)
    upper = apostol_genocchi(n + 1, lam, precision)
    lower = apostol_genocchi(n, lam, precision)
    lhs = upper.number(k)
    rhs = lower.number(k - 1) * (2 * k) - lower.number(k) * (2 - Fraction(2 * k, n))
    params = {"k": k, "n": n, "lambda": lam}
    return make_result("T2_15", params, lhs - rhs, expected_failures)
