"""
Generating-function tables for the Genocchi / Bernoulli / Euler families.

Every polynomial family here is of Appell type: its EGF is g(t) e^{c x t} for a
kernel g, so the table is built once from the kernel numbers g_k and the rows
follow by binomial expansion

    row_n(x) = sum_k C(n, k) g_k (c x)^(n-k).

Tables are cached per (parameters, precision). Symbolic lambda is the RatFun
generator ``LAMBDA``; a table at lambda**m is obtained from the generator table
by exponent remapping instead of a second series computation.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional

from .errors import ParameterError, PrecisionError, SingularParameterError
from .exact import (
    LAMBDA,
    RatFun,
    XPoly,
    as_exact,
    binomial,
    exact_sum,
    is_lambda_generator,
    lambda_power,
    sign,
)
from .series import (
    Series,
    egf_coeff,
    exp_linear,
    monomial,
    one,
    series_div,
    series_mul,
    sin_cos_linear,
    sinh_cosh_linear,
    subst_square,
)

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 33


class Family(str, Enum):
    GENOCCHI = "genocchi"
    UNSIGNED_GENOCCHI = "unsigned-genocchi"
    BERNOULLI = "bernoulli"
    EULER = "euler"
    APOSTOL_GENOCCHI = "apostol-genocchi"
    APOSTOL_BERNOULLI = "apostol-bernoulli"
    GENOCCHI_ABC = "genocchi-abc"
    LUO_BERNOULLI_ABC = "luo-bernoulli-abc"
    LUO_EULER_AB = "luo-euler-ab"
    HERMITE_GENOCCHI = "hermite-genocchi"
    HERMITE_GENOCCHI_AB = "hermite-genocchi-ab"
    TWO_VAR_GENOCCHI = "two-var-genocchi"


LAMBDA_FAMILIES = frozenset(
    {
        Family.APOSTOL_GENOCCHI,
        Family.APOSTOL_BERNOULLI,
        Family.GENOCCHI_ABC,
        Family.HERMITE_GENOCCHI,
        Family.HERMITE_GENOCCHI_AB,
        Family.TWO_VAR_GENOCCHI,
    }
)
ORDER_FAMILIES = frozenset(
    {
        Family.BERNOULLI,
        Family.EULER,
        Family.APOSTOL_GENOCCHI,
        Family.APOSTOL_BERNOULLI,
        Family.GENOCCHI_ABC,
        Family.LUO_BERNOULLI_ABC,
    }
)
LOG_FAMILIES = frozenset({Family.GENOCCHI_ABC, Family.LUO_BERNOULLI_ABC, Family.LUO_EULER_AB})
# families whose kernel denominator is lambda e^{..} + e^{..}
GENOCCHI_KERNEL_FAMILIES = frozenset(
    {
        Family.GENOCCHI,
        Family.APOSTOL_GENOCCHI,
        Family.GENOCCHI_ABC,
        Family.HERMITE_GENOCCHI,
        Family.HERMITE_GENOCCHI_AB,
        Family.TWO_VAR_GENOCCHI,
    }
)
# tabulated as numbers only: every row is a constant
SEQUENCE_FAMILIES = frozenset(
    {Family.UNSIGNED_GENOCCHI, Family.LUO_EULER_AB, Family.HERMITE_GENOCCHI, Family.HERMITE_GENOCCHI_AB}
)

ONE = Fraction(1)


def _tuple_of(values: Any, size: int, label: str) -> Optional[tuple[Any, ...]]:
    if values is None:
        return None
    out = tuple(as_exact(v) for v in values)
    if len(out) != size:
        raise ParameterError(f"{label} needs {size} values, got {len(out)}")
    return out


@dataclass(frozen=True)
class FamilySpec:
    """
    Parameters of one family table.

    ``logs`` is (ln a, ln b, ln c); ``aux`` is (y, p) for the two-variable family,
    whose second variable is the product p*y; ``ab`` is the exponent pair of the
    (a, b)-Hermite form.
    """

    family: Family
    order: int = 1
    lam: Any = ONE
    logs: Optional[tuple[Any, Any, Any]] = None
    aux: Optional[tuple[Any, Any]] = None
    ab: Optional[tuple[Any, Any]] = None
    max_n: int = 12

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "family", Family(self.family))
        except ValueError as e:
            raise ParameterError(f"unknown family: {self.family!r}") from e
        object.__setattr__(self, "lam", as_exact(self.lam))
        object.__setattr__(self, "logs", _tuple_of(self.logs, 3, "logs"))
        object.__setattr__(self, "aux", _tuple_of(self.aux, 2, "aux"))
        object.__setattr__(self, "ab", _tuple_of(self.ab, 2, "ab"))

    def validate(self, precision: int) -> None:
        f = self.family
        if self.order < 0:
            raise ParameterError("order must be a non-negative integer")
        if f not in ORDER_FAMILIES and self.order != 1:
            raise ParameterError(f"{f.value} has no order parameter (got {self.order})")
        if self.max_n < 0:
            raise ParameterError("max_n must be non-negative")
        if self.max_n >= precision:
            raise PrecisionError(f"max_n={self.max_n} does not fit precision {precision}")
        if f in GENOCCHI_KERNEL_FAMILIES and not isinstance(self.lam, RatFun) and self.lam == -1:
            raise SingularParameterError(f"lambda = -1 makes the {f.value} kernel singular")
        if f not in LAMBDA_FAMILIES and self.lam != 1:
            raise ParameterError(f"{f.value} takes no lambda (got {self.lam})")
        if f in LOG_FAMILIES:
            if self.logs is None:
                raise ParameterError(f"{f.value} needs logs (ln a, ln b, ln c)")
            if any(isinstance(v, RatFun) for v in self.logs):
                raise ParameterError("logs must be rational")
            la, lb, _ = self.logs
            if f is Family.LUO_BERNOULLI_ABC and la == lb:
                raise SingularParameterError("ln a = ln b makes the Bernoulli (a,b,c) kernel vanish")
        elif self.logs is not None:
            raise ParameterError(f"{f.value} takes no logs")
        if f is Family.TWO_VAR_GENOCCHI:
            if self.aux is None:
                raise ParameterError("two-var-genocchi needs aux = (y, p)")
        elif self.aux is not None:
            raise ParameterError(f"{f.value} takes no aux parameters")
        if f is Family.HERMITE_GENOCCHI_AB:
            if self.ab is None:
                raise ParameterError("hermite-genocchi-ab needs ab = (a, b)")
            if any(not v for v in self.ab):
                raise ParameterError("hermite-genocchi-ab needs a != 0 and b != 0")
        elif self.ab is not None:
            raise ParameterError(f"{f.value} takes no (a, b) pair")

    @property
    def row_scale(self) -> Any:
        """The c of e^{c x t}; 1 except for the log-parametrised families."""
        if self.family in (Family.GENOCCHI_ABC, Family.LUO_BERNOULLI_ABC):
            return self.logs[2]
        return ONE


@dataclass(frozen=True)
class PolyTable:
    spec: FamilySpec
    rows: tuple[XPoly, ...]
    precision: int = DEFAULT_PRECISION

    def row(self, n: int) -> XPoly:
        if not 0 <= n < len(self.rows):
            raise PrecisionError(f"row {n} is outside the table (max_n={len(self.rows) - 1})")
        return self.rows[n]

    def number(self, n: int) -> Any:
        """The family number, i.e. the row at x = 0."""
        return self.row(n)[0]

    def numbers(self) -> tuple[Any, ...]:
        return tuple(r[0] for r in self.rows)

    def value(self, n: int, x: Any) -> Any:
        return self.row(n).evaluate(x)

    def substitute_lambda_power(self, m: int) -> "PolyTable":
        """Same table with lambda replaced by lambda**m."""
        if not is_lambda_generator(self.spec.lam):
            raise ParameterError("lambda substitution needs a table built at symbolic lambda")
        if m == 1:
            return self

        def sub(c: Any) -> Any:
            return c.compose_power(m) if isinstance(c, RatFun) else c

        rows = tuple(r.map_coefficients(sub) for r in self.rows)
        return PolyTable(replace(self.spec, lam=LAMBDA.compose_power(m)), rows, self.precision)


def _require_regular(lam: Any) -> None:
    if not isinstance(lam, RatFun) and lam == -1:
        raise SingularParameterError("lambda = -1 makes the Genocchi kernel singular")


def _quotient(numerator: Series, denominator: Series, precision: int) -> Series:
    # both sides are built one coefficient longer so a denominator of valuation 1 still yields N terms
    return series_div(numerator, denominator).truncate(precision)


def _lam_exp(lam: Any, a: Any, precision: int) -> Series:
    """lambda * e^{a t}."""
    return exp_linear(a, precision) * lam


@lru_cache(maxsize=512)
def genocchi_kernel(lam: Any, precision: int, a: Any = ONE) -> Series:
    """2t / (lambda e^{a t} + 1)."""
    _require_regular(lam)
    n = precision + 1
    return _quotient(monomial(1, n, 2), _lam_exp(lam, a, n) + 1, precision)


@lru_cache(maxsize=512)
def bernoulli_kernel(lam: Any, precision: int) -> Series:
    """t / (lambda e^t - 1)."""
    n = precision + 1
    denominator = _lam_exp(lam, ONE, n) - 1
    if denominator.valuation() > 1:
        raise SingularParameterError("degenerate Apostol-Bernoulli kernel")
    return _quotient(monomial(1, n), denominator, precision)


@lru_cache(maxsize=64)
def euler_kernel(precision: int) -> Series:
    """2 / (e^t + 1)."""
    return series_div(one(precision) * 2, exp_linear(ONE, precision) + 1)


@lru_cache(maxsize=512)
def abc_kernel(lam: Any, la: Any, lb: Any, precision: int) -> Series:
    """2t / (lambda b^t + a^t) with a = e^{la}, b = e^{lb}."""
    _require_regular(lam)
    n = precision + 1
    return _quotient(monomial(1, n, 2), _lam_exp(lam, lb, n) + exp_linear(la, n), precision)


@lru_cache(maxsize=512)
def luo_bernoulli_kernel(la: Any, lb: Any, precision: int) -> Series:
    """t / (b^t - a^t)."""
    if la == lb:
        raise SingularParameterError("ln a = ln b makes the Bernoulli (a,b,c) kernel vanish")
    n = precision + 1
    return _quotient(monomial(1, n), exp_linear(lb, n) - exp_linear(la, n), precision)


@lru_cache(maxsize=512)
def luo_euler_kernel(la: Any, lb: Any, precision: int) -> Series:
    """2 / (b^t + a^t)."""
    return series_div(one(precision) * 2, exp_linear(lb, precision) + exp_linear(la, precision))


@lru_cache(maxsize=1024)
def kernel_power(kind: str, params: tuple[Any, ...], order: int, precision: int) -> Series:
    """kernel**order, reusing kernel**(order-1) from the cache."""
    if order == 0:
        return one(precision)
    base = _KERNELS[kind](*params, precision)
    if order == 1:
        return base
    return series_mul(kernel_power(kind, params, order - 1, precision), base)


_KERNELS = {
    "genocchi": genocchi_kernel,
    "bernoulli": bernoulli_kernel,
    "euler": euler_kernel,
    "abc": abc_kernel,
    "luo-bernoulli": luo_bernoulli_kernel,
    "luo-euler": luo_euler_kernel,
}


def unsigned_genocchi_series(precision: int) -> Series:
    """t tan(t/2)."""
    sin_s, cos_s = sin_cos_linear(Fraction(1, 2), precision)
    return series_div(sin_s.shift_up(1), cos_s)


def tanh_genocchi_series(precision: int) -> Series:
    """-t tanh(t/2); its t^(2n) coefficients carry (-1)^n |G_{2n}|."""
    sinh_s, cosh_s = sinh_cosh_linear(Fraction(1, 2), precision)
    return -series_div(sinh_s.shift_up(1), cosh_s)


@lru_cache(maxsize=256)
def generating_series(spec: FamilySpec, precision: int) -> Series:
    """
    The kernel series g(t) of a family (the e^{c x t} factor excluded).

    ``spec.max_n`` is ignored; callers normalise it away to share cache entries.
    """
    f, l, lam = spec.family, spec.order, spec.lam
    if f is Family.GENOCCHI:
        return genocchi_kernel(ONE, precision)
    if f is Family.UNSIGNED_GENOCCHI:
        return unsigned_genocchi_series(precision)
    if f is Family.BERNOULLI:
        return kernel_power("bernoulli", (ONE,), l, precision)
    if f is Family.EULER:
        return kernel_power("euler", (), l, precision)
    if f is Family.APOSTOL_GENOCCHI:
        return kernel_power("genocchi", (lam,), l, precision)
    if f is Family.APOSTOL_BERNOULLI:
        return kernel_power("bernoulli", (lam,), l, precision)
    if f is Family.GENOCCHI_ABC:
        la, lb, _ = spec.logs
        return kernel_power("abc", (lam, la, lb), l, precision)
    if f is Family.LUO_BERNOULLI_ABC:
        la, lb, _ = spec.logs
        return kernel_power("luo-bernoulli", (la, lb), l, precision)
    if f is Family.LUO_EULER_AB:
        la, lb, _ = spec.logs
        return luo_euler_kernel(la, lb, precision)
    if f is Family.HERMITE_GENOCCHI:
        k = genocchi_kernel(lam, precision)
        return series_mul(k, subst_square(k))
    if f is Family.HERMITE_GENOCCHI_AB:
        a, b = spec.ab
        return series_mul(genocchi_kernel(lam, precision, a), subst_square(genocchi_kernel(lam, precision, b)))
    if f is Family.TWO_VAR_GENOCCHI:
        y, p = spec.aux
        return series_mul(genocchi_kernel(lam, precision), subst_square(exp_linear(y * p, precision)))
    raise ParameterError(f"unsupported family: {f}")


def appell_rows(numbers: tuple[Any, ...], scale: Any = ONE) -> tuple[XPoly, ...]:
    """row_n(x) = sum_k C(n, k) g_k (scale x)^(n-k) for n < len(numbers)."""
    powers: list[Any] = [ONE]
    for _ in range(len(numbers)):
        powers.append(powers[-1] * scale)
    rows = []
    for n in range(len(numbers)):
        rows.append(XPoly(binomial(n, j) * numbers[n - j] * powers[j] for j in range(n + 1)))
    return tuple(rows)


@lru_cache(maxsize=512)
def _build(spec: FamilySpec, precision: int) -> PolyTable:
    series = generating_series(replace(spec, max_n=0), precision)
    numbers = tuple(egf_coeff(series, n) for n in range(spec.max_n + 1))
    if spec.family in SEQUENCE_FAMILIES:
        rows = tuple(XPoly.constant(v) for v in numbers)
    else:
        rows = appell_rows(numbers, spec.row_scale)
    logger.debug("built %s table order=%s max_n=%s precision=%s", spec.family.value, spec.order, spec.max_n, precision)
    return PolyTable(spec, rows, precision)


def build_table(spec: FamilySpec, precision: int = DEFAULT_PRECISION) -> PolyTable:
    spec.validate(precision)
    return _build(spec, precision)


def lambda_power_table(spec: FamilySpec, m: int, precision: int = DEFAULT_PRECISION) -> PolyTable:
    """The table of ``spec`` with lambda replaced by lambda**m."""
    if m < 1:
        raise ParameterError("lambda power must be >= 1")
    if m == 1:
        return build_table(spec, precision)
    if is_lambda_generator(spec.lam) and not any(
        isinstance(v, RatFun) for group in (spec.logs, spec.aux, spec.ab) if group for v in group
    ):
        return build_table(spec, precision).substitute_lambda_power(m)
    return build_table(replace(spec, lam=lambda_power(spec.lam, m)), precision)


# -- named builders --------------------------------------------------------


def genocchi_table(max_n: int, precision: int = DEFAULT_PRECISION) -> PolyTable:
    return build_table(FamilySpec(Family.GENOCCHI, max_n=max_n), precision)


def apostol_genocchi_table(order: int, lam: Any, max_n: int, precision: int = DEFAULT_PRECISION) -> PolyTable:
    return build_table(FamilySpec(Family.APOSTOL_GENOCCHI, order=order, lam=lam, max_n=max_n), precision)


def apostol_bernoulli_table(order: int, lam: Any, max_n: int, precision: int = DEFAULT_PRECISION) -> PolyTable:
    return build_table(FamilySpec(Family.APOSTOL_BERNOULLI, order=order, lam=lam, max_n=max_n), precision)


def euler_table(order: int, max_n: int, precision: int = DEFAULT_PRECISION) -> PolyTable:
    return build_table(FamilySpec(Family.EULER, order=order, max_n=max_n), precision)


def bernoulli_table(order: int, max_n: int, precision: int = DEFAULT_PRECISION) -> PolyTable:
    return build_table(FamilySpec(Family.BERNOULLI, order=order, max_n=max_n), precision)


def genocchi_abc_table(
    order: int, lam: Any, logs: tuple[Any, Any, Any], max_n: int, precision: int = DEFAULT_PRECISION
) -> PolyTable:
    return build_table(
        FamilySpec(Family.GENOCCHI_ABC, order=order, lam=lam, logs=logs, max_n=max_n), precision
    )


def luo_bernoulli_abc_table(
    logs: tuple[Any, Any, Any], max_n: int, precision: int = DEFAULT_PRECISION, order: int = 1
) -> PolyTable:
    return build_table(FamilySpec(Family.LUO_BERNOULLI_ABC, order=order, logs=logs, max_n=max_n), precision)


def two_var_genocchi_table(
    lam: Any, y: Any, max_n: int, precision: int = DEFAULT_PRECISION, p: Any = ONE
) -> PolyTable:
    return build_table(FamilySpec(Family.TWO_VAR_GENOCCHI, lam=lam, aux=(y, p), max_n=max_n), precision)


def unsigned_genocchi(max_n: int, precision: int = DEFAULT_PRECISION) -> tuple[Fraction, ...]:
    """Coefficients of t tan(t/2); only even indices are non-zero (index 0 included, as 0)."""
    return build_table(FamilySpec(Family.UNSIGNED_GENOCCHI, max_n=max_n), precision).numbers()


def tanh_genocchi(max_n: int, precision: int = DEFAULT_PRECISION) -> tuple[Fraction, ...]:
    if max_n >= precision:
        raise PrecisionError(f"max_n={max_n} does not fit precision {precision}")
    series = tanh_genocchi_series(precision)
    return tuple(egf_coeff(series, n) for n in range(max_n + 1))


def signed_genocchi_from_unsigned(values: tuple[Any, ...]) -> tuple[Any, ...]:
    """G_1 = 1 and G_{2k} = (-1)^k |G_{2k}|; odd indices above 1 vanish."""
    out = []
    for n, v in enumerate(values):
        if n == 1:
            out.append(ONE)
        elif n % 2:
            out.append(Fraction(0))
        else:
            out.append(v * sign(n // 2))
    return tuple(out)


def luo_euler_ab(la: Any, lb: Any, max_n: int, precision: int = DEFAULT_PRECISION) -> tuple[Any, ...]:
    spec = FamilySpec(Family.LUO_EULER_AB, logs=(la, lb, ONE), max_n=max_n)
    return build_table(spec, precision).numbers()


@lru_cache(maxsize=64)
def euler_numbers(max_n: int, precision: int = DEFAULT_PRECISION) -> tuple[Fraction, ...]:
    """Signed Euler numbers E_0..E_max_n from sech t = 2e^t / (e^{2t} + 1)."""
    if max_n >= precision:
        raise PrecisionError(f"max_n={max_n} does not fit precision {precision}")
    series = series_div(exp_linear(ONE, precision) * 2, exp_linear(2, precision) + 1)
    return tuple(egf_coeff(series, n) for n in range(max_n + 1))


def genocchi_from_euler(n: int, *, convention: str = "unsigned", precision: int = DEFAULT_PRECISION) -> Fraction:
    """
    G_{2n} from the Euler numbers:

        sum_{k<n} (-1)^(n-k-1) (n-k) C(2n, 2k) E_{2k} / 2^(2n-2)

    With ``convention="unsigned"`` (|E_{2k}|) this reproduces |G_{2n}|; with
    ``"signed"`` the sum is kept for comparison; it stops matching from n = 2 on.
    """
    if n < 1:
        raise ParameterError("genocchi_from_euler needs n >= 1")
    if convention not in ("unsigned", "signed"):
        raise ParameterError(f"unknown Euler convention: {convention!r}")
    euler = euler_numbers(2 * n, max(precision, 2 * n + 1))
    if convention == "unsigned":
        euler = tuple(abs(e) for e in euler)
    total = exact_sum(sign(n - k - 1) * (n - k) * binomial(2 * n, 2 * k) * euler[2 * k] for k in range(n))
    return total * Fraction(1, 2 ** (2 * n - 2))


def hermite_genocchi(lam: Any, max_n: int, precision: int = DEFAULT_PRECISION) -> tuple[Any, ...]:
    spec = FamilySpec(Family.HERMITE_GENOCCHI, lam=lam, max_n=max_n)
    return build_table(spec, precision).numbers()


def hermite_genocchi_sum(lam: Any, max_n: int, precision: int = DEFAULT_PRECISION) -> tuple[Any, ...]:
    """Convolution form sum_k n!/(k!(n-2k)!) G_k(lam) G_{n-2k}(lam)."""
    g = apostol_genocchi_table(1, lam, max_n, precision).numbers()
    return tuple(
        exact_sum(
            Fraction(math.factorial(n), math.factorial(k) * math.factorial(n - 2 * k)) * g[k] * g[n - 2 * k]
            for k in range(n // 2 + 1)
        )
        for n in range(max_n + 1)
    )


def hermite_genocchi_ab(a: Any, b: Any, lam: Any, max_n: int, precision: int = DEFAULT_PRECISION) -> tuple[Any, ...]:
    spec = FamilySpec(Family.HERMITE_GENOCCHI_AB, lam=lam, ab=(a, b), max_n=max_n)
    return build_table(spec, precision).numbers()


def hermite_genocchi_ab_sum(
    a: Any, b: Any, lam: Any, max_n: int, precision: int = DEFAULT_PRECISION
) -> tuple[Any, ...]:
    """sum_k n!/(k!(n-2k)!) a^(n-2k-1) b^(k-1) G_k(lam) G_{n-2k}(lam)."""
    a, b = as_exact(a), as_exact(b)
    if not a or not b:
        raise ParameterError("hermite-genocchi-ab needs a != 0 and b != 0")
    g = apostol_genocchi_table(1, lam, max_n, precision).numbers()
    return tuple(
        exact_sum(
            Fraction(math.factorial(n), math.factorial(k) * math.factorial(n - 2 * k))
            * a ** (n - 2 * k - 1)
            * b ** (k - 1)
            * g[k]
            * g[n - 2 * k]
            for k in range(n // 2 + 1)
        )
        for n in range(max_n + 1)
    )


def two_var_genocchi_sum_table(
    lam: Any, y: Any, max_n: int, precision: int = DEFAULT_PRECISION
) -> tuple[XPoly, ...]:
    """G_n(x, y) = sum_s n!/(s!(n-2s)!) y^s G_{n-2s}(x; lam)."""
    y = as_exact(y)
    g = apostol_genocchi_table(1, lam, max_n, precision)
    return tuple(
        XPoly.total(
            [
                g.row(n - 2 * s) * (Fraction(math.factorial(n), math.factorial(s) * math.factorial(n - 2 * s)) * y**s)
                for s in range(n // 2 + 1)
            ]
        )
        for n in range(max_n + 1)
    )


def gandhi_genocchi(max_n: int) -> tuple[Fraction, ...]:
    """
    |G_n| for n <= max_n from the Gandhi recurrence

        A_1(x) = 1,   A_{k+1}(x) = (x+1)^2 A_k(x+1) - x^2 A_k(x),   |G_{2k+2}| = A_k(1),

    a triangle-style construction that never touches a generating function.
    Odd indices are 0 except |G_1| = 1; |G_0| = 0 and |G_2| = 1.
    """
    out = [Fraction(0)] * (max_n + 1)
    for n in (1, 2):
        if n <= max_n:
            out[n] = ONE
    x = XPoly.x()
    a = XPoly.constant(1)
    k = 1
    while 2 * k + 2 <= max_n:
        out[2 * k + 2] = a.evaluate(1)
        a = (x + 1) ** 2 * a.shift(1) - x**2 * a
        k += 1
    return tuple(out)
