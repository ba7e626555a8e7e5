"""
Exact coefficient arithmetic.

Scalars are either rationals (``fractions.Fraction``, plain ``int`` is accepted
on input) or elements of Q(lambda) represented by ``RatFun``. ``XPoly`` is a
dense polynomial in x over whichever scalar field its coefficients live in.

Q[lambda] arithmetic and gcds are delegated to sympy's sparse polynomial rings;
RatFun only keeps the pair (numerator, denominator) in canonical form.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence, Union

from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_ff_prs_gcd
from sympy.polys.polyerrors import HeuristicGCDFailed
from sympy.polys.rings import ring

LAMBDA_RING, _LAM = ring("lam", QQ)

Scalar = Union[int, Fraction, "RatFun"]


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise ValueError(f"parts {tuple(parts)} do not form a composition of {n}")
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def rising_factorial(n: int, k: int) -> int:
    # (n)_k = n (n+1) ... (n+k-1); the empty product is 1
    return math.prod(n + i for i in range(k))


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """
    Weak compositions of ``total`` into exactly ``parts`` non-negative parts.

    Zero parts yields the empty tuple iff total == 0. The enumeration order is
    deterministic (first part descending).
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def sign(exponent: int) -> int:
    """(-1)**exponent as an int, also for negative exponents."""
    return -1 if exponent % 2 else 1


def as_exact(value: Any) -> Any:
    if isinstance(value, bool):
        raise TypeError("bool is not an exact scalar")
    if isinstance(value, int):
        return Fraction(value)
    return value


def exact_div(a: Any, b: Any) -> Any:
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _qq(value: Any) -> Any:
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    raise TypeError(f"cannot lift {type(value).__name__} into Q")


def _fraction(c: Any) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _dense(poly: Any) -> tuple[Fraction, ...]:
    if not poly:
        return (Fraction(0),)
    out = [Fraction(0)] * (poly.degree() + 1)
    for (exp,), c in poly.items():
        out[exp] = _fraction(c)
    return tuple(out)


def _poly(coeffs: Sequence[Any]) -> Any:
    return LAMBDA_RING.from_dict({(i,): _qq(Fraction(c)) for i, c in enumerate(coeffs) if c})


def _cofactors(a: Any, b: Any) -> tuple[Any, Any, Any]:
    """
    (g, a/g, b/g) with g = gcd(a, b) monic.

    sympy's ring gcd over Q runs the heuristic integer gcd only and gives up on
    some inputs; those go through the subresultant PRS over Q instead.
    """
    try:
        g, ca, cb = a.cofactors(b)
    except HeuristicGCDFailed:
        g, ca, cb = (
            LAMBDA_RING.from_list(p) for p in dup_ff_prs_gcd(a.to_dense(), b.to_dense(), QQ)
        )
    if g and g.LC != 1:
        # constant gcds come back as a ground gcd such as gcd(1/2, 1) = 1/2
        lc = g.LC
        g, ca, cb = g.quo_ground(lc), ca.mul_ground(lc), cb.mul_ground(lc)
    return g, ca, cb


def _canonical(num: Any, den: Any) -> tuple[Any, Any]:
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return LAMBDA_RING.zero, LAMBDA_RING.one
    _, num, den = _cofactors(num, den)
    lc = den.LC
    if lc != 1:
        num = num.quo_ground(lc)
        den = den.quo_ground(lc)
    return num, den


class RatFun:
    """
    Element of Q(lambda) in canonical form: gcd(num, den) = 1, den monic.

    Equality is structural on the canonical pair, so two RatFun compare equal
    iff they are the same rational function. Constants compare equal (and hash
    equal) to the matching Fraction.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: Any, den: Any = None) -> None:
        if den is None:
            den = LAMBDA_RING.one
        self._num, self._den = _canonical(num, den)

    @classmethod
    def _raw(cls, num: Any, den: Any) -> "RatFun":
        obj = object.__new__(cls)
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def constant(cls, value: Any) -> "RatFun":
        return cls._raw(LAMBDA_RING.ground_new(_qq(value)), LAMBDA_RING.one)

    @property
    def num(self) -> tuple[Fraction, ...]:
        """Numerator coefficients in ascending powers of lambda."""
        return _dense(self._num)

    @property
    def den(self) -> tuple[Fraction, ...]:
        return _dense(self._den)

    def constant_value(self) -> Optional[Fraction]:
        if self._den != 1:
            return None
        if not self._num:
            return Fraction(0)
        if self._num.degree() > 0:
            return None
        return _fraction(self._num.LC)

    def degree(self) -> tuple[int, int]:
        """(deg num, deg den); the zero function reports -1 for the numerator."""
        return (self._num.degree() if self._num else -1, self._den.degree())

    @staticmethod
    def total(items: Sequence["RatFun"]) -> "RatFun":
        """Sum over a common denominator with a single final cancellation."""
        if not items:
            return ZERO
        common = items[0]._den
        for item in items[1:]:
            if item._den != common:
                common = common * _cofactors(common, item._den)[2]
        num = LAMBDA_RING.zero
        for item in items:
            if item._den == common:
                num += item._num
            else:
                num += item._num * common.exquo(item._den)
        return RatFun(num, common)

    def _lift(self, other: Any) -> Optional["RatFun"]:
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFun.constant(other)
        return None

    def __add__(self, other: Any) -> Any:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return self
            # num + c*den stays coprime to den
            return RatFun._raw(self._num + self._den.mul_ground(_qq(other)), self._den)
        if not isinstance(other, RatFun):
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        if self._den == other._den:
            return RatFun(self._num + other._num, self._den)
        g, a, b = _cofactors(self._den, other._den)
        if g == 1:
            return RatFun._raw(
                self._num * other._den + other._num * self._den, self._den * other._den
            )
        return RatFun(self._num * b + other._num * a, self._den * b)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun._raw(-self._num, self._den)

    def __sub__(self, other: Any) -> Any:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self + (-lifted)

    def __rsub__(self, other: Any) -> Any:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted + (-self)

    def __mul__(self, other: Any) -> Any:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return ZERO
            return RatFun._raw(self._num.mul_ground(_qq(other)), self._den)
        if not isinstance(other, RatFun):
            return NotImplemented
        if not self._num or not other._num:
            return ZERO
        # monic gcds keep both reduced denominators monic
        _, n1, d2 = _cofactors(self._num, other._den)
        _, n2, d1 = _cofactors(other._num, self._den)
        return RatFun._raw(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self._num:
            raise ZeroDivisionError("inverse of the zero rational function")
        lc = self._num.LC
        return RatFun._raw(self._den.quo_ground(lc), self._num.quo_ground(lc))

    def __truediv__(self, other: Any) -> Any:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("division of a rational function by zero")
            return RatFun._raw(self._num.quo_ground(_qq(other)), self._den)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> Any:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted * self.inverse()

    def __pow__(self, k: int) -> "RatFun":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RatFun._raw(self._num**k, self._den**k)

    def __bool__(self) -> bool:
        return bool(self._num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFun):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            value = self.constant_value()
            return value is not None and value == other
        return NotImplemented

    def __hash__(self) -> int:
        value = self.constant_value()
        if value is not None:
            return hash(value)
        return hash((frozenset(self._num.items()), frozenset(self._den.items())))

    def compose_power(self, m: int) -> "RatFun":
        """Substitute lambda -> lambda**m; exponent remapping keeps the form canonical."""
        if m < 1:
            raise ValueError("compose_power needs m >= 1")
        if m == 1:
            return self
        return RatFun._raw(_remap(self._num, m), _remap(self._den, m))

    def evaluate(self, value: Any) -> Fraction:
        """Evaluate at a rational lambda; a vanishing denominator raises ZeroDivisionError."""
        point = Fraction(value)
        den = _horner(_dense(self._den), point)
        if not den:
            raise ZeroDivisionError(f"denominator vanishes at lambda = {point}")
        return _horner(_dense(self._num), point) / den

    def __repr__(self) -> str:
        return f"RatFun({self})"

    def __str__(self) -> str:
        if self._den == 1:
            return str(self._num)
        return f"({self._num})/({self._den})"


def _remap(poly: Any, m: int) -> Any:
    return LAMBDA_RING.from_dict({(e * m,): c for (e,), c in poly.items()})


def _horner(coeffs: Sequence[Any], point: Any) -> Any:
    acc: Any = 0
    for c in reversed(coeffs):
        acc = acc * point + c
    return acc


ZERO = RatFun._raw(LAMBDA_RING.zero, LAMBDA_RING.one)
LAMBDA = RatFun._raw(_LAM, LAMBDA_RING.one)


def ratfun_normalize(num: Sequence[Any], den: Sequence[Any]) -> RatFun:
    """Build the canonical RatFun from dense ascending coefficient lists."""
    return RatFun(_poly(num), _poly(den))


def is_symbolic(value: Any) -> bool:
    return isinstance(value, RatFun)


def is_lambda_generator(value: Any) -> bool:
    return isinstance(value, RatFun) and value == LAMBDA


def lambda_power(lam: Any, m: int) -> Any:
    if m == 1:
        return lam
    if isinstance(lam, RatFun):
        return lam.compose_power(m) if is_lambda_generator(lam) else lam**m
    return as_exact(lam) ** m


def exact_sum(values: Iterable[Any]) -> Any:
    """
    Sum exact values. RatFun terms are pooled over a common denominator so a
    long sum costs one gcd instead of one per addition.
    """
    total: Any = 0
    pending: list[RatFun] = []
    for value in values:
        if isinstance(value, RatFun):
            if value:
                pending.append(value)
        else:
            total = total + value
    if pending:
        total = total + RatFun.total(pending)
    return total


class XPoly:
    """Dense polynomial in x with exact coefficients (ascending, trailing zeros trimmed)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()) -> None:
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Any, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "XPoly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, value: Any) -> "XPoly":
        return cls((as_exact(value),))

    @classmethod
    def monomial(cls, degree: int, coeff: Any = 1) -> "XPoly":
        return cls([Fraction(0)] * degree + [as_exact(coeff)])

    @staticmethod
    def total(polys: Sequence["XPoly"]) -> "XPoly":
        width = max((len(p.coeffs) for p in polys), default=0)
        return XPoly(
            exact_sum(p.coeffs[j] for p in polys if j < len(p.coeffs)) for j in range(width)
        )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> Any:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    @staticmethod
    def _coerce(other: Any) -> Optional["XPoly"]:
        if isinstance(other, XPoly):
            return other
        if isinstance(other, (int, Fraction, RatFun)) and not isinstance(other, bool):
            return XPoly((other,))
        return None

    def __eq__(self, other: object) -> bool:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        if len(self.coeffs) != len(poly.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, poly.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Any) -> Any:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        width = max(len(self.coeffs), len(poly.coeffs))
        return XPoly(self[j] + poly[j] for j in range(width))

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> Any:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return self + (-poly)

    def __rsub__(self, other: Any) -> Any:
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return poly + (-self)

    def __mul__(self, other: Any) -> Any:
        if isinstance(other, XPoly):
            if not self.coeffs or not other.coeffs:
                return XPoly()
            out = []
            for k in range(len(self.coeffs) + len(other.coeffs) - 1):
                lo = max(0, k - len(other.coeffs) + 1)
                hi = min(k, len(self.coeffs) - 1)
                out.append(
                    exact_sum(
                        self.coeffs[i] * other.coeffs[k - i]
                        for i in range(lo, hi + 1)
                        if self.coeffs[i] and other.coeffs[k - i]
                    )
                )
            return XPoly(out)
        if isinstance(other, (int, Fraction, RatFun)) and not isinstance(other, bool):
            if not other:
                return XPoly()
            return XPoly(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> Any:
        if isinstance(other, (int, Fraction, RatFun)) and not isinstance(other, bool):
            inv = exact_div(1, other)
            return XPoly(c * inv for c in self.coeffs)
        return NotImplemented

    def __pow__(self, k: int) -> "XPoly":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = XPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "XPoly":
        return XPoly(fn(c) for c in self.coeffs)

    def evaluate(self, point: Any) -> Any:
        return _horner(self.coeffs, as_exact(point)) if self.coeffs else Fraction(0)

    __call__ = evaluate

    def derivative(self, order: int = 1) -> "XPoly":
        if order < 0:
            raise ValueError("derivative order must be non-negative")
        cs = self.coeffs
        for _ in range(order):
            cs = tuple(c * j for j, c in enumerate(cs) if j)
            if not cs:
                break
        return XPoly(cs)

    def antiderivative(self) -> "XPoly":
        """The antiderivative with zero constant term."""
        return XPoly([Fraction(0)] + [c * Fraction(1, j + 1) for j, c in enumerate(self.coeffs)])

    def definite_integral(self, lower: Any, upper: Any) -> Any:
        anti = self.antiderivative()
        return anti.evaluate(upper) - anti.evaluate(lower)

    def shift(self, c: Any) -> "XPoly":
        return xpoly_shift(self, c)

    def scale_x(self, s: Any) -> "XPoly":
        """p(s*x)."""
        s = as_exact(s)
        out = []
        power: Any = Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * s
        return XPoly(out)

    def compose_affine(self, s: Any, c: Any) -> "XPoly":
        """p(s*x + c)."""
        return self.shift(c).scale_x(s)

    def reflect(self) -> "XPoly":
        return self.scale_x(-1)

    def __repr__(self) -> str:
        return f"XPoly({list(self.coeffs)!r})"


def xpoly_shift(p: XPoly, c: Any) -> XPoly:
    """p(x + c) by binomial re-expansion: q_j = sum_{i>=j} C(i, j) p_i c^(i-j)."""
    if not c or not p.coeffs:
        return p
    c = as_exact(c)
    d = len(p.coeffs)
    powers: list[Any] = [Fraction(1)]
    for _ in range(d - 1):
        powers.append(powers[-1] * c)
    out = []
    for j in range(d):
        out.append(
            exact_sum(
                p.coeffs[i] * (binomial(i, j) * powers[i - j])
                for i in range(j, d)
                if p.coeffs[i]
            )
        )
    return XPoly(out)
