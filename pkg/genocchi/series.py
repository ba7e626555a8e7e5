"""
Truncated formal power series in t with exact coefficients.

A ``Series`` stores the plain coefficients c_0..c_{N-1} (not the EGF-normalised
n! c_n) together with its precision N: every coefficient below N is exact and
nothing is known at or above it. Coefficients may be Fraction, RatFun or XPoly;
the arithmetic below only uses +, -, * and division by scalars.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .errors import NonSeriesQuotientError, PrecisionError
from .exact import XPoly, as_exact, exact_div, exact_sum, sign


@dataclass(frozen=True)
class Series:
    coeffs: tuple[Any, ...]
    precision: int

    def __post_init__(self) -> None:
        if self.precision < 0:
            raise PrecisionError("series precision must be non-negative")
        cs = [as_exact(c) for c in self.coeffs[: self.precision]]
        cs.extend(Fraction(0) for _ in range(self.precision - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))

    def __getitem__(self, k: int) -> Any:
        if not 0 <= k < self.precision:
            raise PrecisionError(f"coefficient t^{k} is outside precision {self.precision}")
        return self.coeffs[k]

    def valuation(self) -> int:
        """Index of the first non-zero coefficient; ``precision`` if none is known."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.precision

    def truncate(self, precision: int) -> "Series":
        if precision > self.precision:
            raise PrecisionError(f"cannot raise precision {self.precision} to {precision}")
        return Series(self.coeffs[:precision], precision)

    def shift_up(self, k: int = 1) -> "Series":
        """Multiply by t**k, keeping the precision."""
        return Series((Fraction(0),) * k + self.coeffs, self.precision)

    def t_derivative(self) -> "Series":
        """d/dt; the result loses one coefficient of precision."""
        return Series(
            tuple(c * k for k, c in enumerate(self.coeffs) if k), max(self.precision - 1, 0)
        )

    def map_coefficients(self, fn: Any) -> "Series":
        return Series(tuple(fn(c) for c in self.coeffs), self.precision)

    def __add__(self, other: Any) -> "Series":
        if isinstance(other, Series):
            return series_add(self, other)
        if not self.precision:
            return self
        return Series((self.coeffs[0] + other,) + self.coeffs[1:], self.precision)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs), self.precision)

    def __sub__(self, other: Any) -> "Series":
        return self + (-other)

    def __rsub__(self, other: Any) -> "Series":
        return (-self) + other

    def __mul__(self, other: Any) -> "Series":
        if isinstance(other, Series):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Series":
        if isinstance(other, Series):
            return series_div(self, other)
        return series_scale(self, exact_div(1, other))

    def __pow__(self, k: int) -> "Series":
        return series_pow(self, k)


def one(precision: int) -> Series:
    return Series((Fraction(1),), precision)


def monomial(k: int, precision: int, coeff: Any = 1) -> Series:
    """coeff * t**k."""
    if k >= precision:
        return Series((), precision)
    return Series((Fraction(0),) * k + (as_exact(coeff),), precision)


def _same_precision(a: Series, b: Series) -> int:
    if a.precision != b.precision:
        raise PrecisionError(f"precision mismatch: {a.precision} != {b.precision}")
    return a.precision


def series_add(a: Series, b: Series) -> Series:
    n = _same_precision(a, b)
    return Series(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), n)


def series_scale(a: Series, c: Any) -> Series:
    return Series(tuple(x * c for x in a.coeffs), a.precision)


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to the common precision."""
    n = _same_precision(a, b)
    ac, bc = a.coeffs, b.coeffs
    return Series(
        tuple(
            exact_sum(ac[i] * bc[k - i] for i in range(k + 1) if ac[i] and bc[k - i])
            for k in range(n)
        ),
        n,
    )


def series_div(a: Series, b: Series) -> Series:
    """
    Quotient a/b.

    Divides out t**v where v = valuation(b); the quotient is then only known to
    precision N - v. Callers that need N coefficients build a and b at N + v.
    """
    n = _same_precision(a, b)
    v = b.valuation()
    if v >= n:
        raise ZeroDivisionError("series division by a series with no known non-zero coefficient")
    if a.valuation() < v:
        raise NonSeriesQuotientError(
            f"numerator valuation {a.valuation()} is below denominator valuation {v}"
        )
    num = a.coeffs[v:]
    den = b.coeffs[v:]
    m = n - v
    inv = exact_div(1, den[0])
    q: list[Any] = []
    for k in range(m):
        acc = exact_sum(den[j] * q[k - j] for j in range(1, k + 1) if den[j] and q[k - j])
        q.append((num[k] - acc) * inv)
    return Series(tuple(q), m)


def series_pow(a: Series, k: int) -> Series:
    if k < 0:
        raise ValueError("series_pow needs a non-negative exponent")
    out = one(a.precision)
    base = a
    while k:
        if k & 1:
            out = series_mul(out, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return out


def exp_linear(a: Any, precision: int) -> Series:
    """e^{a t}; ``a`` may be a scalar or an XPoly (e.g. x for e^{xt})."""
    term: Any = XPoly.constant(1) if isinstance(a, XPoly) else Fraction(1)
    coeffs = []
    for k in range(precision):
        if k:
            term = term * a * Fraction(1, k)
        coeffs.append(term)
    return Series(tuple(coeffs), precision)


def sin_cos_linear(a: Any, precision: int) -> tuple[Series, Series]:
    """(sin(a t), cos(a t))."""
    sin_c: list[Any] = []
    cos_c: list[Any] = []
    power: Any = Fraction(1)
    for k in range(precision):
        term = power * Fraction(1, math.factorial(k))
        if k % 2:
            sin_c.append(term * sign((k - 1) // 2))
            cos_c.append(Fraction(0))
        else:
            sin_c.append(Fraction(0))
            cos_c.append(term * sign(k // 2))
        power = power * a
    return Series(tuple(sin_c), precision), Series(tuple(cos_c), precision)


def sinh_cosh_linear(a: Any, precision: int) -> tuple[Series, Series]:
    """(sinh(a t), cosh(a t))."""
    e = exp_linear(a, precision).coeffs
    sinh_c = tuple(c if k % 2 else Fraction(0) for k, c in enumerate(e))
    cosh_c = tuple(Fraction(0) if k % 2 else c for k, c in enumerate(e))
    return Series(sinh_c, precision), Series(cosh_c, precision)


def subst_scale(a: Series, m: Any) -> Series:
    """a(m t)."""
    m = as_exact(m)
    out = []
    power: Any = Fraction(1)
    for c in a.coeffs:
        out.append(c * power)
        power = power * m
    return Series(tuple(out), a.precision)


def subst_square(a: Series) -> Series:
    """a(t^2), same precision."""
    out: list[Any] = [Fraction(0)] * a.precision
    for k, c in enumerate(a.coeffs):
        if 2 * k >= a.precision:
            break
        out[2 * k] = c
    return Series(tuple(out), a.precision)


def egf_coeff(a: Series, n: int) -> Any:
    """n! * [t^n] a."""
    if not 0 <= n < a.precision:
        raise PrecisionError(f"egf index {n} is outside precision {a.precision}")
    return a.coeffs[n] * math.factorial(n)


def egf_coeffs(a: Series, count: int) -> tuple[Any, ...]:
    return tuple(egf_coeff(a, n) for n in range(count))


def from_egf(values: Sequence[Any], precision: int) -> Series:
    return Series(tuple(as_exact(v) * Fraction(1, math.factorial(k)) for k, v in enumerate(values)), precision)
