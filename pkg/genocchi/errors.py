"""Exception types raised by the genocchi library."""
from __future__ import annotations


class GenocchiError(ValueError):
    """Base class; subclasses ValueError so plain callers can catch it generically."""


class ParameterError(GenocchiError):
    """Invalid or contradictory parameters (wrong parity, missing logs, ...)."""


class SingularParameterError(ParameterError):
    """The requested kernel is degenerate, e.g. lambda = -1 for a Genocchi family."""


class PrecisionError(GenocchiError):
    """An index or configuration does not fit into the series precision."""


class NonSeriesQuotientError(GenocchiError):
    """Series division whose quotient would need negative powers of t."""
