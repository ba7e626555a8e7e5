"""
Weighted alternating power sums

    Z_k(m; lam)      = sum_{j=1}^{m} (-1)^(j+1) lam^j j^k
    Z_k^(l)(m; lam)  = (-1)^l sum_{v_1+..+v_m = l} multinomial(l; v) (-lam)^r r^k,
                       r = v_1 + 2 v_2 + .. + m v_m

and a generating-function oracle for the second one. 0**0 is 1 throughout,
which is what makes Z_0^(l) well defined.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from .errors import ParameterError
from .exact import as_exact, compositions, exact_sum, multinomial, sign
from .series import egf_coeff, exp_linear, series_pow, Series


def _check(k: int, m: int, l: int = 1) -> None:
    if k < 0 or m < 0 or l < 0:
        raise ParameterError(f"z-sums need k, m, l >= 0 (got k={k}, m={m}, l={l})")


def z_sum(k: int, m: int, lam: Any) -> Any:
    _check(k, m)
    lam = as_exact(lam)
    return as_exact(exact_sum(sign(j + 1) * lam**j * j**k for j in range(1, m + 1)))


def z_sum_multi(k: int, l: int, m: int, lam: Any) -> Any:
    """
    Z_k^(l)(m; lam) by direct enumeration of the weak compositions of l into m parts.

    Compositions with the same weight r are grouped before multiplying by (-lam)^r.
    """
    _check(k, m, l)
    lam = as_exact(lam)
    weights: dict[int, int] = {}
    for v in compositions(l, m):
        r = sum((i + 1) * vi for i, vi in enumerate(v))
        weights[r] = weights.get(r, 0) + multinomial(l, v)
    total = exact_sum((-lam) ** r * (w * r**k) for r, w in sorted(weights.items()))
    return as_exact(total * sign(l))


def z_sum_multi_gf(k: int, l: int, m: int, lam: Any, precision: Optional[int] = None) -> Any:
    """
    The same number read off the EGF (sum_{i=1}^{m} (-1)^(i+1) lam^i e^{i t})^l.

    The weight factor (-1)^l of the enumeration form is absorbed by the sign of the
    inner sum, so no extra sign appears here.
    """
    _check(k, m, l)
    lam = as_exact(lam)
    n = precision if precision is not None else k + 1
    inner = Series((), n)
    for i in range(1, m + 1):
        inner = inner + exp_linear(i, n) * (sign(i + 1) * lam**i)
    return as_exact(egf_coeff(series_pow(inner, l), k))


def composition_count(l: int, m: int) -> int:
    """Number of weak compositions of l into m parts, by enumeration."""
    return sum(1 for _ in compositions(l, m))
