"""
Differential equations of the Genocchi generating function and the complement
relation of the Apostol-Genocchi polynomials.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Optional

from ..errors import ParameterError, PrecisionError
from ..exact import XPoly, as_exact
from ..families import kernel_power
from ..series import Series, exp_linear, series_div, series_mul
from .base import IdentityResult, apostol_genocchi, make_result, require_non_negative, resolve_precision

PDE_EQUATIONS = ("x", "t")


@lru_cache(maxsize=16)
def phi_series(order: int, precision: int) -> Series:
    """phi(x, t) = (2t / (e^t + 1))^order e^{x t}, coefficients in Q[x]."""
    kernel = kernel_power("genocchi", (Fraction(1),), order, precision)
    return series_mul(kernel, exp_linear(XPoly.x(), precision))


def _xcoeff(series: Series, k: int) -> XPoly:
    # all-zero coefficients collapse to Fraction(0) inside Series
    c = series[k]
    return c if isinstance(c, XPoly) else XPoly.constant(c)


@lru_cache(maxsize=16)
def _logistic_weight(precision: int) -> Series:
    """t e^t / (e^t + 1)."""
    e = exp_linear(Fraction(1), precision)
    return series_div(e.shift_up(1), e + 1)


def check_PHI_PDE(
    n: int,
    l: int,
    equation: str = "x",
    *,
    precision: int = 20,
    expected_failures: Optional[Iterable[str]] = None,
) -> IdentityResult:
    """
    Coefficient t^n of one of

        x:  d(phi)/dx - t phi = 0
        t:  t d(phi)/dt - (l + t x) phi + l (t e^t / (e^t + 1)) phi = 0

    The t equation already has d(phi)/dx replaced by t phi, so no negative
    powers of t appear.
    """
    if equation not in PDE_EQUATIONS:
        raise ParameterError(f"equation must be one of {PDE_EQUATIONS}, got {equation!r}")
    require_non_negative(n=n, l=l)
    if n >= precision:
        raise PrecisionError(f"index {n} does not fit precision {precision}")
    phi = phi_series(l, precision)
    previous = _xcoeff(phi, n - 1) if n else XPoly()
    current = _xcoeff(phi, n)
    if equation == "x":
        residual = current.derivative() - previous
    else:
        weighted = series_mul(_logistic_weight(precision), phi)
        residual = current * (n - l) - XPoly.x() * previous + _xcoeff(weighted, n) * l
    params = {"n": n, "l": l, "equation": equation}
    return make_result("PHI_PDE", params, residual, expected_failures)


def check_COMPLEMENT(
    n: int,
    lam: Any,
    *,
    precision: Optional[int] = None,
    expected_failures: Optional[Iterable[str]] = None,
) -> IdentityResult:
    """lam G_n(x + 1; lam) + G_n(x; lam) = 2 n x^(n-1)."""
    require_non_negative(n=n)
    lam = as_exact(lam)
    precision = resolve_precision(precision, n)
    row = apostol_genocchi(1, lam, precision).row(n)
    lhs = row.shift(1) * lam + row
    rhs = XPoly.monomial(n - 1, 2 * n) if n else XPoly()
    return make_result("COMPLEMENT", {"n": n, "lambda": lam}, lhs - rhs, expected_failures)
