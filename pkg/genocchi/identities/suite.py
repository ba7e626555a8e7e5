"""
Grid runner for the identity checks.

A ``SuiteConfig`` fixes the parameter grid and the expected-failure set;
``run_suite`` walks the grid in catalog order and ``build_report`` turns the
results into the JSON report together with the family checks.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Iterable, Iterator, Mapping, Optional, Sequence

from ..codec import parse_lambda, parse_scalar, serialize_lambda, serialize_value
from ..errors import ParameterError, PrecisionError, SingularParameterError
from ..exact import LAMBDA, RatFun
from .base import DEFAULT_EXPECTED_FAILURES, IDENTITY_IDS, IdentityResult, Status, validate_ids
from .differential import PDE_EQUATIONS, check_COMPLEMENT, check_PHI_PDE
from .family_checks import (
    FAMILY_CHECKS,
    FamilyCheck,
    check_hermite_ab_dual,
    check_hermite_dual,
    check_lambda_spot,
    check_two_var_dual,
    check_zsum_oracle,
)
from .multiplication import (
    check_C2_2,
    check_C2_3,
    check_C2_5,
    check_C2_6,
    check_R4_2,
    check_T2_1,
    check_T2_4,
    check_T4_1,
)
from .parameters import check_R3_4, check_R3_5_1, check_R3_5_2, check_R3_5_3, check_T3_1, check_T3_2, check_T3_3
from .recurrences import (
    check_C2_8,
    check_C2_10,
    check_C2_11,
    check_C2_12,
    check_C2_14,
    check_T2_7,
    check_T2_9,
    check_T2_13,
    check_T2_15,
)

logger = logging.getLogger(__name__)

SUITE_VERSION = "1.0"

Logs = tuple[Fraction, Fraction, Fraction]

_INT_KEYS = ("max_n", "z_max_n", "lowering_max_k", "log_samples", "seed", "family_max_n", "pde_precision")
_INT_LIST_KEYS = (
    "orders", "odd_m", "even_m", "z_m", "lowering_orders",
    "abc_orders", "abc_beta", "derivative_orders", "two_var_m", "pde_orders",
)


@dataclass(frozen=True)
class SuiteConfig:
    max_n: int = 12
    orders: tuple[int, ...] = (1, 2, 3)
    odd_m: tuple[int, ...] = (1, 3, 5)
    even_m: tuple[int, ...] = (2, 4)
    z_max_n: int = 10
    z_m: tuple[int, ...] = (1, 2, 3, 4)
    lambdas: tuple[Any, ...] = (LAMBDA,)
    spot_lambdas: tuple[Any, ...] = (Fraction(1), Fraction(2), Fraction(1, 3), Fraction(-2))
    lowering_orders: tuple[int, ...] = (1, 2, 3, 4)
    lowering_max_k: int = 16
    abc_orders: tuple[int, ...] = (1, 2, 3)
    abc_beta: tuple[int, ...] = (0, 1)
    derivative_orders: tuple[int, ...] = (1, 2)
    integral_bounds: tuple[tuple[Any, Any], ...] = (
        (Fraction(0), Fraction(1)),
        (Fraction(-1, 2), Fraction(3, 2)),
    )
    logs: tuple[Logs, ...] = ((Fraction(0), Fraction(1), Fraction(1)),)
    log_samples: int = 20
    seed: int = 20240519
    y_samples: tuple[Any, ...] = (Fraction(1, 2), Fraction(2), Fraction(-1, 3), Fraction(3, 2))
    p_samples: tuple[Any, ...] = (Fraction(1), Fraction(2), Fraction(1, 3), Fraction(-1))
    two_var_m: tuple[int, ...] = (1, 3)
    hermite_ab: tuple[tuple[Any, Any], ...] = ((Fraction(1, 2), Fraction(2)),)
    family_max_n: int = 16
    pde_orders: tuple[int, ...] = (1, 2, 3)
    pde_precision: int = 20
    only: Optional[frozenset[str]] = None
    expected_failures: frozenset[str] = field(default_factory=lambda: DEFAULT_EXPECTED_FAILURES)
    precision: Optional[int] = None
    family_checks: bool = True

    def selected(self, identity_id: str) -> bool:
        return self.only is None or identity_id in self.only

    def selected_ids(self) -> tuple[str, ...]:
        return tuple(i for i in IDENTITY_IDS if self.selected(i))

    def required_precision(self) -> int:
        """max_n + max_order * max_m + 1, widened for the other grids that index further."""
        max_order = max((*self.orders, *self.abc_orders, 1))
        max_m = max((*self.odd_m, *self.even_m, *self.two_var_m, 1))
        return max(
            self.max_n + max_order * max_m + 1,
            self.max_n + 2,
            self.z_max_n + max_order + 1,
            self.lowering_max_k + 1,
        )

    def resolved_precision(self) -> int:
        needed = self.required_precision()
        if self.precision is None:
            return needed
        if self.precision < needed:
            raise PrecisionError(f"precision {self.precision} is below the {needed} this grid needs")
        return self.precision

    def log_tuples(self) -> tuple[Logs, ...]:
        """The fixed tuples first, then ``log_samples`` seeded random ones with La != Lb and Lc != 0."""
        rng = random.Random(self.seed)
        out = list(self.logs)
        while len(out) < len(self.logs) + self.log_samples:
            la, lb, lc = (Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(3))
            if la == lb or not lc:
                continue
            out.append((la, lb, lc))
        return tuple(out)

    def validate(self) -> None:
        for name in ("max_n", "z_max_n", "lowering_max_k", "log_samples", "family_max_n"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be non-negative")
        if any(m < 1 or m % 2 == 0 for m in (*self.odd_m, *self.two_var_m)):
            raise ParameterError("odd_m and two_var_m take positive odd integers")
        if any(m < 2 or m % 2 for m in self.even_m):
            raise ParameterError("even_m takes positive even integers")
        if any(l < 0 for l in (*self.orders, *self.pde_orders, *self.abc_beta, *self.z_m)):
            raise ParameterError("orders and multipliers must be non-negative")
        if any(l < 1 for l in (*self.abc_orders, *self.lowering_orders)):
            raise ParameterError("abc_orders and lowering_orders start at 1")
        if any(la == lb or not lc for la, lb, lc in self.logs):
            raise ParameterError("log tuples need La != Lb and Lc != 0")
        if any(lam == -1 for lam in (*self.lambdas, *self.spot_lambdas)):
            raise SingularParameterError("lambda = -1 makes the Genocchi kernel singular")
        if any(not y for y in self.y_samples):
            raise ParameterError("y samples must be non-zero")
        if self.pde_precision < 1:
            raise PrecisionError("pde_precision must be positive")
        if self.only is not None:
            validate_ids(self.only)
        validate_ids(self.expected_failures)
        self.resolved_precision()

    def to_json(self) -> dict[str, Any]:
        return {
            "max_n": self.max_n,
            "orders": list(self.orders),
            "odd_m": list(self.odd_m),
            "even_m": list(self.even_m),
            "z_max_n": self.z_max_n,
            "z_m": list(self.z_m),
            "lambdas": [serialize_lambda(v) for v in self.lambdas],
            "spot_lambdas": [serialize_lambda(v) for v in self.spot_lambdas],
            "lowering_orders": list(self.lowering_orders),
            "lowering_max_k": self.lowering_max_k,
            "abc_orders": list(self.abc_orders),
            "abc_beta": list(self.abc_beta),
            "derivative_orders": list(self.derivative_orders),
            "integral_bounds": serialize_value(self.integral_bounds),
            "logs": serialize_value(self.logs),
            "log_samples": self.log_samples,
            "seed": self.seed,
            "y_samples": serialize_value(self.y_samples),
            "p_samples": serialize_value(self.p_samples),
            "two_var_m": list(self.two_var_m),
            "hermite_ab": serialize_value(self.hermite_ab),
            "family_max_n": self.family_max_n,
            "pde_orders": list(self.pde_orders),
            "pde_precision": self.pde_precision,
            "only": sorted(self.only) if self.only is not None else None,
            "expected_failures": sorted(self.expected_failures),
            "precision": self.resolved_precision(),
            "family_checks": self.family_checks,
        }

    @classmethod
    def from_mapping(cls, cfg: Mapping[str, Any]) -> "SuiteConfig":
        """Build from task config; keys that are not grid settings are ignored."""
        out = cls()
        kwargs: dict[str, Any] = {}
        for name in _INT_KEYS:
            if cfg.get(name) is not None:
                kwargs[name] = _int(cfg[name], name)
        for name in _INT_LIST_KEYS:
            if cfg.get(name) is not None:
                kwargs[name] = tuple(_int(v, name) for v in _as_list(cfg[name]))
        for name in ("lambdas", "spot_lambdas"):
            if cfg.get(name) is not None:
                kwargs[name] = tuple(_parse(parse_lambda, v) for v in _as_list(cfg[name]))
        for name in ("y_samples", "p_samples"):
            if cfg.get(name) is not None:
                kwargs[name] = tuple(_parse(parse_scalar, v) for v in _as_list(cfg[name]))
        for name, size in (("logs", 3), ("integral_bounds", 2), ("hermite_ab", 2)):
            if cfg.get(name) is not None:
                kwargs[name] = _groups(cfg[name], size, name)
        if cfg.get("only") is not None:
            kwargs["only"] = validate_ids(_as_list(cfg["only"]))
        if cfg.get("expected_failures") is not None:
            kwargs["expected_failures"] = validate_ids(_as_list(cfg["expected_failures"]))
        if cfg.get("expect_pass"):
            base = kwargs.get("expected_failures", out.expected_failures)
            kwargs["expected_failures"] = base - validate_ids(_as_list(cfg["expect_pass"]))
        if cfg.get("precision") is not None:
            kwargs["precision"] = _int(cfg["precision"], "precision")
        if cfg.get("family_checks") is not None:
            kwargs["family_checks"] = bool(cfg["family_checks"])
        config = replace(out, **kwargs)
        config.validate()
        return config


def _as_list(value: Any) -> list[Any]:
    if isinstance(value, str):
        return [v for v in (s.strip() for s in value.split(",")) if v]
    if isinstance(value, (list, tuple, set, frozenset)):
        return list(value)
    return [value]


def _int(value: Any, name: str) -> int:
    if isinstance(value, bool):
        raise ParameterError(f"{name}: expected an integer, got {value!r}")
    try:
        return int(str(value).strip())
    except ValueError as e:
        raise ParameterError(f"{name}: expected an integer, got {value!r}") from e


def _parse(fn: Callable[[Any], Any], value: Any) -> Any:
    if isinstance(value, (Fraction, RatFun)):
        return value
    return fn(value)


def _groups(value: Any, size: int, name: str) -> tuple[tuple[Any, ...], ...]:
    """Lists of lists, or text like "0,1,1; 1/2,2,1"."""
    groups = [g for g in value.split(";") if g.strip()] if isinstance(value, str) else list(value)
    out = []
    for group in groups:
        items = _as_list(group)
        if len(items) != size:
            raise ParameterError(f"{name}: expected groups of {size} values, got {group!r}")
        out.append(tuple(_parse(parse_scalar, v) for v in items))
    return tuple(out)


GridPoint = tuple[str, Callable[..., IdentityResult], tuple[Any, ...], dict[str, Any]]


PointSource = Callable[[], Iterable[tuple[Callable[..., IdentityResult], tuple, dict]]]


def _grid(config: SuiteConfig) -> dict[str, PointSource]:
    ns = range(config.max_n + 1)
    lams = config.lambdas
    logs = config.log_tuples()
    ys = config.y_samples
    orders, odd, even, abc = config.orders, config.odd_m, config.even_m, config.abc_orders
    zm, zn = config.z_m, range(config.z_max_n + 1)
    two_m = config.two_var_m

    def abc_points(variant: Any, fn: Callable[..., IdentityResult] = check_T3_3) -> PointSource:
        lead = () if variant is None else (variant,)
        return lambda: (
            (fn, (*lead, n, l, lam, *lg), {}) for lam, lg, l, n in product(lams, logs, abc, ns)
        )

    def bounds(i: int) -> dict[str, Any]:
        s, t = config.integral_bounds[i % len(config.integral_bounds)]
        return {"s": s, "t": t}

    return {
        "T2_1": lambda: ((check_T2_1, (n, l, m, lam), {}) for lam, l, m, n in product(lams, orders, odd, ns)),
        "C2_2": lambda: ((check_C2_2, (n, l, m), {}) for l, m, n in product(orders, odd, ns)),
        "C2_3": lambda: ((check_C2_3, (n, m), {}) for m, n in product(odd, ns)),
        "T2_4": lambda: ((check_T2_4, (n, l, m, lam), {}) for lam, l, m, n in product(lams, orders, even, ns)),
        "C2_5": lambda: ((check_C2_5, (n, l, m), {}) for l, m, n in product(orders, even, ns)),
        "C2_6": lambda: ((check_C2_6, (n, m), {}) for m, n in product(even, ns)),
        "T2_7": lambda: ((check_T2_7, (n, l, m, lam), {}) for lam, l, m, n in product(lams, orders, zm, zn)),
        "C2_8": lambda: ((check_C2_8, (n, l, m), {}) for l, m, n in product(orders, zm, zn)),
        "T2_9": lambda: ((check_T2_9, (n, l, m, lam), {}) for lam, l, m, n in product(lams, orders, odd, ns)),
        "C2_10": lambda: ((check_C2_10, (n, l, m), {}) for l, m, n in product(orders, odd, ns)),
        "C2_11": lambda: ((check_C2_11, (n, m, lam), {}) for lam, m, n in product(lams, odd, ns)),
        "C2_12": lambda: ((check_C2_12, (n, m), {}) for m, n in product(odd, ns)),
        "T2_13": lambda: (
            (check_T2_13, (n, l, m, lam), {}) for lam, l, m, n in product(lams, orders, even, ns)
        ),
        "C2_14": lambda: ((check_C2_14, (n, l, m), {}) for l, m, n in product(orders, even, ns)),
        "T2_15": lambda: (
            (check_T2_15, (k, n, lam), {})
            for lam, n, k in product(lams, config.lowering_orders, range(1, config.lowering_max_k + 1))
        ),
        "T3_1": abc_points(None, check_T3_1),
        "T3_2": abc_points(None, check_T3_2),
        "T3_3_1": abc_points(1),
        "T3_3_2": abc_points(2),
        "T3_3_3": abc_points(3),
        # y and the integral bounds rotate with the log tuple
        "T3_3_4": lambda: (
            (check_T3_3, (4, n, l, lam, *lg), {"beta": beta, "y": ys[i % len(ys)]})
            for lam, (i, lg), l, beta, n in product(lams, enumerate(logs), abc, config.abc_beta, ns)
        ),
        "T3_3_5": lambda: (
            (check_T3_3, (5, n, l, lam, *lg), {"ell": ell})
            for lam, lg, l, ell, n in product(lams, logs, abc, config.derivative_orders, ns)
        ),
        "T3_3_6": lambda: (
            (check_T3_3, (6, n, l, lam, *lg), bounds(i))
            for lam, (i, lg), l, n in product(lams, enumerate(logs), abc, range(config.max_n))
        ),
        "R3_4_printed": abc_points("printed", check_R3_4),
        "R3_4_corrected": abc_points("corrected", check_R3_4),
        "R3_5_1": lambda: ((check_R3_5_1, (n, y, *lg), {}) for lg, y, n in product(logs, ys, ns)),
        "R3_5_2": lambda: ((check_R3_5_2, (n, y), {}) for y, n in product(ys, ns)),
        "R3_5_3": lambda: ((check_R3_5_3, (n, y), {}) for y, n in product(ys, ns)),
        "T4_1": lambda: (
            (check_T4_1, (n, m, lam, y, p), {})
            for lam, m, (y, p), n in product(lams, two_m, zip(ys, config.p_samples), ns)
        ),
        "R4_2": lambda: ((check_R4_2, (n, m, lam, y), {}) for lam, m, y, n in product(lams, two_m, ys, ns)),
        "PHI_PDE": lambda: (
            (check_PHI_PDE, (n, l, eq), {"precision": config.pde_precision})
            for eq, l, n in product(PDE_EQUATIONS, config.pde_orders, range(config.pde_precision))
        ),
        "COMPLEMENT": lambda: ((check_COMPLEMENT, (n, lam), {}) for lam, n in product(lams, ns)),
    }


def iter_grid(config: SuiteConfig) -> Iterator[GridPoint]:
    """(id, check, args, kwargs) for every selected grid point, in report order."""
    grid = _grid(config)
    for identity_id in config.selected_ids():
        for fn, args, kwargs in grid[identity_id]():
            yield identity_id, fn, args, kwargs


def run_suite(
    config: SuiteConfig,
    *,
    log: Optional[logging.Logger] = None,
    on_result: Optional[Callable[[IdentityResult], None]] = None,
) -> list[IdentityResult]:
    log = log or logger
    precision = config.resolved_precision()
    results: list[IdentityResult] = []
    current = None
    for identity_id, fn, args, kwargs in iter_grid(config):
        if identity_id != current:
            current = identity_id
            log.info("checking %s", identity_id)
        kwargs = {"precision": precision, **kwargs, "expected_failures": config.expected_failures}
        res = fn(*args, **kwargs)
        if res.status is Status.FAIL:
            log.warning("%s fails at %s", res.id, res.to_json()["params"])
        results.append(res)
        if on_result is not None:
            on_result(res)
    log.info("suite finished: %d grid points", len(results))
    return results


def run_family_checks(config: SuiteConfig, *, log: Optional[logging.Logger] = None) -> list[FamilyCheck]:
    log = log or logger
    checks = [fn() for _, fn in FAMILY_CHECKS]
    for lam in config.lambdas:
        checks.append(check_hermite_dual(lam, config.family_max_n))
        checks.extend(check_hermite_ab_dual(a, b, lam, config.family_max_n) for a, b in config.hermite_ab)
        checks.extend(check_two_var_dual(lam, y, config.family_max_n) for y in config.y_samples)
        checks.append(check_zsum_oracle(lam))
    for order in config.orders:
        checks.append(check_lambda_spot(config.spot_lambdas, order))
    for c in checks:
        if not c.passed:
            log.warning("family check %s failed: %s", c.name, c.to_json()["detail"])
    return checks


@dataclass(frozen=True)
class SuiteOutcome:
    unexpected: tuple[str, ...]
    resolved: tuple[str, ...]
    family_failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not (self.unexpected or self.resolved or self.family_failures)


def evaluate_outcome(
    config: SuiteConfig,
    results: Sequence[IdentityResult],
    family_checks: Sequence[FamilyCheck] = (),
) -> SuiteOutcome:
    """
    Unexpected: ids with a ``fail`` point. Resolved: expected-failure ids that
    were run and never failed.
    """
    seen = {r.id for r in results}
    unexpected = sorted({r.id for r in results if r.status is Status.FAIL}, key=IDENTITY_IDS.index)
    documented = {r.id for r in results if r.status is Status.DOCUMENTED}
    resolved = [i for i in IDENTITY_IDS if i in config.expected_failures and i in seen and i not in documented]
    family_failures = [c.name for c in family_checks if not c.passed]
    return SuiteOutcome(tuple(unexpected), tuple(resolved), tuple(family_failures))


def summarize(results: Iterable[IdentityResult]) -> dict[str, int]:
    summary = {s.value: 0 for s in Status}
    for r in results:
        summary[r.status.value] += 1
    return summary


def build_report(
    config: SuiteConfig,
    results: Sequence[IdentityResult],
    family_checks: Sequence[FamilyCheck] = (),
) -> dict[str, Any]:
    outcome = evaluate_outcome(config, results, family_checks)
    conventions: dict[str, Any] = {}
    for c in family_checks:
        if c.name == "euler_number_formula":
            conventions["euler_number_formula"] = c.to_json()["detail"]
    return {
        "suite_version": SUITE_VERSION,
        "config": config.to_json(),
        "results": [r.to_json() for r in results],
        "summary": summarize(results),
        "family_checks": [c.to_json() for c in family_checks],
        "conventions": conventions,
        "unexpected_failures": list(outcome.unexpected),
        "resolved_errata": list(outcome.resolved),
        "ok": outcome.ok,
    }


def verify(
    config: SuiteConfig,
    *,
    log: Optional[logging.Logger] = None,
    on_result: Optional[Callable[[IdentityResult], None]] = None,
) -> dict[str, Any]:
    """Run identities and (for unrestricted runs) the family checks, and build the report."""
    results = run_suite(config, log=log, on_result=on_result)
    checks = run_family_checks(config, log=log) if config.family_checks and config.only is None else []
    return build_report(config, results, checks)
