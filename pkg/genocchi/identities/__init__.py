"""Residual checks of the catalogued identities, plus the suite runner."""
from __future__ import annotations

from .base import CATALOG, DEFAULT_EXPECTED_FAILURES, IDENTITY_IDS, IdentityResult, Status, make_result
from .differential import check_COMPLEMENT, check_PHI_PDE
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
from .parameters import (
    check_R3_4,
    check_R3_5,
    check_R3_5_1,
    check_R3_5_2,
    check_R3_5_3,
    check_T3_1,
    check_T3_2,
    check_T3_3,
)
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
from .suite import SuiteConfig, build_report, run_family_checks, run_suite, verify

__all__ = [
    "CATALOG",
    "DEFAULT_EXPECTED_FAILURES",
    "IDENTITY_IDS",
    "IdentityResult",
    "Status",
    "SuiteConfig",
    "build_report",
    "check_C2_2",
    "check_C2_3",
    "check_C2_5",
    "check_C2_6",
    "check_C2_8",
    "check_C2_10",
    "check_C2_11",
    "check_C2_12",
    "check_C2_14",
    "check_COMPLEMENT",
    "check_PHI_PDE",
    "check_R3_4",
    "check_R3_5",
    "check_R3_5_1",
    "check_R3_5_2",
    "check_R3_5_3",
    "check_R4_2",
    "check_T2_1",
    "check_T2_4",
    "check_T2_7",
    "check_T2_9",
    "check_T2_13",
    "check_T2_15",
    "check_T3_1",
    "check_T3_2",
    "check_T3_3",
    "check_T4_1",
    "make_result",
    "run_family_checks",
    "run_suite",
    "verify",
]
