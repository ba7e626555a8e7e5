"""
Consistency checks of the family tables themselves: golden values, bridges to
Bernoulli and Euler numbers, alternative constructions of the same sequence.

They are reported next to the identity results but are not identities with an
expected-failure policy: each one either agrees or it does not.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping

from ..codec import serialize_lambda, serialize_value
from ..exact import LAMBDA, RatFun, XPoly, as_exact, sign
from ..families import (
    DEFAULT_PRECISION,
    apostol_genocchi_table,
    bernoulli_table,
    euler_table,
    gandhi_genocchi,
    genocchi_from_euler,
    genocchi_table,
    hermite_genocchi,
    hermite_genocchi_ab,
    hermite_genocchi_ab_sum,
    hermite_genocchi_sum,
    signed_genocchi_from_unsigned,
    tanh_genocchi,
    two_var_genocchi_sum_table,
    two_var_genocchi_table,
    unsigned_genocchi,
)
from ..zsums import z_sum_multi, z_sum_multi_gf

logger = logging.getLogger(__name__)

GENOCCHI_GOLDEN = tuple(Fraction(v) for v in (0, 1, -1, 0, 1, 0, -3, 0, 17, 0, -155, 0, 2073))

# G_1(x) .. G_6(x), ascending coefficients
GENOCCHI_ROWS_GOLDEN = (
    (1,),
    (-1, 2),
    (0, -3, 3),
    (1, 0, -6, 4),
    (0, 5, 0, -10, 5),
    (-3, 0, 15, 0, -15, 6),
)


@dataclass(frozen=True)
class FamilyCheck:
    name: str
    passed: bool
    detail: Mapping[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "detail": serialize_value(dict(self.detail)),
        }


def _mismatches(expected: Iterable[Any], actual: Iterable[Any]) -> list[int]:
    return [i for i, (a, b) in enumerate(zip(expected, actual)) if a != b]


def check_genocchi_golden(precision: int = DEFAULT_PRECISION) -> FamilyCheck:
    numbers = genocchi_table(len(GENOCCHI_GOLDEN) - 1, precision).numbers()
    bad = _mismatches(GENOCCHI_GOLDEN, numbers)
    return FamilyCheck("genocchi_numbers_golden", not bad, {"mismatch_at": bad})


def check_genocchi_rows_golden(precision: int = DEFAULT_PRECISION) -> FamilyCheck:
    table = genocchi_table(len(GENOCCHI_ROWS_GOLDEN), precision)
    bad = [
        n
        for n, coeffs in enumerate(GENOCCHI_ROWS_GOLDEN, start=1)
        if table.row(n) != XPoly(Fraction(c) for c in coeffs)
    ]
    return FamilyCheck("genocchi_rows_golden", not bad, {"mismatch_at": bad})


def check_bernoulli_bridge(max_pairs: int = 15, precision: int = DEFAULT_PRECISION) -> FamilyCheck:
    """G_{2n} = 2 (1 - 2^{2n}) B_{2n}."""
    top = 2 * max_pairs
    g = genocchi_table(top, max(precision, top + 1)).numbers()
    b = bernoulli_table(1, top, max(precision, top + 1)).numbers()
    bad = [n for n in range(1, max_pairs + 1) if g[2 * n] != 2 * (1 - 2 ** (2 * n)) * b[2 * n]]
    return FamilyCheck("bernoulli_bridge", not bad, {"n_max": max_pairs, "mismatch_at": bad})


def check_euler_bridge(max_pairs: int = 15, precision: int = DEFAULT_PRECISION) -> FamilyCheck:
    """G_{2n} = 2n E_{2n-1}(0), and more generally G_n = n E_{n-1}(0)."""
    top = 2 * max_pairs
    g = genocchi_table(top, max(precision, top + 1)).numbers()
    e = euler_table(1, top, max(precision, top + 1)).numbers()
    bad = [n for n in range(1, top + 1) if g[n] != n * e[n - 1]]
    return FamilyCheck("euler_bridge", not bad, {"n_max": top, "mismatch_at": bad})


def euler_formula_conventions(n_max: int = 10, precision: int = DEFAULT_PRECISION) -> dict[str, Any]:
    """
    Evaluate the Euler-number sum for G_{2n} under both Euler conventions and
    compare with both Genocchi conventions; report which pairings match for all n.
    """
    unsigned_g = unsigned_genocchi(2 * n_max, max(precision, 2 * n_max + 1))
    signed_g = signed_genocchi_from_unsigned(unsigned_g)
    combos: dict[str, bool] = {}
    for euler_conv in ("unsigned", "signed"):
        values = [genocchi_from_euler(n, convention=euler_conv, precision=precision) for n in range(1, n_max + 1)]
        for genocchi_conv, target in (("unsigned", unsigned_g), ("signed", signed_g)):
            key = f"euler_{euler_conv}/genocchi_{genocchi_conv}"
            combos[key] = all(values[n - 1] == target[2 * n] for n in range(1, n_max + 1))
    matching = sorted(k for k, ok in combos.items() if ok)
    logger.info("euler formula conventions matching: %s", matching or "none")
    return {"n_max": n_max, "combinations": combos, "matching": matching}


def check_euler_formula(n_max: int = 10, precision: int = DEFAULT_PRECISION) -> FamilyCheck:
    conv = euler_formula_conventions(n_max, precision)
    return FamilyCheck("euler_number_formula", bool(conv["matching"]), conv)


def check_tanh_variant(max_n: int = 20, precision: int = DEFAULT_PRECISION) -> FamilyCheck:
    """-t tanh(t/2) carries the signed numbers; t tan(t/2) the unsigned ones."""
    unsigned_g = unsigned_genocchi(max_n, precision)
    tanh_g = tanh_genocchi(max_n, precision)
    signed = genocchi_table(max_n, precision).numbers()
    bad = [
        n
        for n in range(2, max_n + 1, 2)
        if not (tanh_g[n] == sign(n // 2) * unsigned_g[n] == signed[n])
    ]
    return FamilyCheck("tanh_variant", not bad, {"max_n": max_n, "mismatch_at": bad})


def check_gandhi_triangle(max_n: int = 20, precision: int = DEFAULT_PRECISION) -> FamilyCheck:
    unsigned_g = unsigned_genocchi(max_n, precision)
    recurrence = gandhi_genocchi(max_n)
    bad = [n for n in range(2, max_n + 1, 2) if recurrence[n] != unsigned_g[n]]
    return FamilyCheck("gandhi_recurrence", not bad, {"max_n": max_n, "mismatch_at": bad})


def check_hermite_dual(lam: Any = LAMBDA, max_n: int = 16, precision: int = DEFAULT_PRECISION) -> FamilyCheck:
    bad = _mismatches(hermite_genocchi(lam, max_n, precision), hermite_genocchi_sum(lam, max_n, precision))
    return FamilyCheck("hermite_dual", not bad, {"lambda": serialize_lambda(lam), "max_n": max_n, "mismatch_at": bad})


def check_hermite_ab_dual(
    a: Any, b: Any, lam: Any = LAMBDA, max_n: int = 16, precision: int = DEFAULT_PRECISION
) -> FamilyCheck:
    egf = hermite_genocchi_ab(a, b, lam, max_n, precision)
    conv = hermite_genocchi_ab_sum(a, b, lam, max_n, precision)
    bad = _mismatches(egf, conv)
    detail = {"a": as_exact(a), "b": as_exact(b), "lambda": serialize_lambda(lam), "max_n": max_n, "mismatch_at": bad}
    return FamilyCheck("hermite_ab_dual", not bad, detail)


def check_two_var_dual(
    lam: Any = LAMBDA, y: Any = Fraction(1, 2), max_n: int = 16, precision: int = DEFAULT_PRECISION
) -> FamilyCheck:
    egf = two_var_genocchi_table(lam, y, max_n, precision).rows
    conv = two_var_genocchi_sum_table(lam, y, max_n, precision)
    bad = _mismatches(egf, conv)
    detail = {"lambda": serialize_lambda(lam), "y": as_exact(y), "max_n": max_n, "mismatch_at": bad}
    return FamilyCheck("two_var_dual", not bad, detail)


def check_zsum_oracle(
    lam: Any = LAMBDA, k_max: int = 8, l_max: int = 3, m_max: int = 4
) -> FamilyCheck:
    bad = [
        [k, l, m]
        for k in range(k_max + 1)
        for l in range(l_max + 1)
        for m in range(m_max + 1)
        if z_sum_multi(k, l, m, lam) != z_sum_multi_gf(k, l, m, lam)
    ]
    detail = {"lambda": serialize_lambda(lam), "k_max": k_max, "l_max": l_max, "m_max": m_max, "mismatch_at": bad}
    return FamilyCheck("zsum_oracle", not bad, detail)


def check_lambda_spot(
    values: Iterable[Any], order: int = 1, max_n: int = 8, precision: int = DEFAULT_PRECISION
) -> FamilyCheck:
    """The symbolic table evaluated at lambda = v equals the table built at v."""
    symbolic = apostol_genocchi_table(order, LAMBDA, max_n, precision)
    bad = []
    for v in values:
        v = as_exact(v)
        concrete = apostol_genocchi_table(order, v, max_n, precision)
        for n in range(max_n + 1):
            spot = symbolic.row(n).map_coefficients(lambda c: c.evaluate(v) if isinstance(c, RatFun) else c)
            if spot != concrete.row(n):
                bad.append([v, n])
    return FamilyCheck("lambda_spot", not bad, {"order": order, "max_n": max_n, "mismatch_at": bad})


FAMILY_CHECKS: tuple[tuple[str, Callable[..., FamilyCheck]], ...] = (
    ("genocchi_numbers_golden", check_genocchi_golden),
    ("genocchi_rows_golden", check_genocchi_rows_golden),
    ("bernoulli_bridge", check_bernoulli_bridge),
    ("euler_bridge", check_euler_bridge),
    ("euler_number_formula", check_euler_formula),
    ("tanh_variant", check_tanh_variant),
    ("gandhi_recurrence", check_gandhi_triangle),
)
