"""
Exact tables and identity checks for the Genocchi, Bernoulli and Euler
polynomial families and their Apostol, (a, b, c), Hermite and two-variable
generalisations.

Arithmetic is exact throughout: ``fractions.Fraction`` for rationals and
``RatFun`` (rational functions of a symbolic lambda, backed by sympy) when the
Apostol parameter is left symbolic.
"""
from __future__ import annotations

from .errors import GenocchiError, NonSeriesQuotientError, ParameterError, PrecisionError, SingularParameterError
from .exact import LAMBDA, RatFun, XPoly
from .families import DEFAULT_PRECISION, Family, FamilySpec, PolyTable, build_table
from .series import Series

__all__ = [
    "DEFAULT_PRECISION",
    "Family",
    "FamilySpec",
    "GenocchiError",
    "LAMBDA",
    "NonSeriesQuotientError",
    "ParameterError",
    "PolyTable",
    "PrecisionError",
    "RatFun",
    "Series",
    "SingularParameterError",
    "XPoly",
    "build_table",
]
