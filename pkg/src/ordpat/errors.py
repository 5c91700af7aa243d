"""Exception hierarchy.

Everything raised by this package derives from :class:`OrdpatError`, so
callers can catch one type. The leaves also derive from the matching
builtin (``ValueError``) to stay friendly to generic error handling.
"""

from __future__ import annotations

__all__ = [
    "OrdpatError",
    "InvalidInputError",
    "TieError",
    "DegenerateSeedError",
    "SchemaError",
    "OrderingError",
    "InsufficientDataError",
    "EmptySeriesError",
]


class OrdpatError(Exception):
    """Base class for all package errors."""


class InvalidInputError(OrdpatError, ValueError):
    """Malformed argument: bad dimension, non-finite value, bad range..."""


class TieError(InvalidInputError):
    """Exact value tie encountered under the ``reject`` tie policy."""


class DegenerateSeedError(InvalidInputError):
    """Logistic initial condition that collapses to a trivial orbit."""


class SchemaError(InvalidInputError):
    """Requested column or layout not present in a delimited input file."""


class OrderingError(InvalidInputError):
    """Timestamps are not strictly increasing where that is required."""


class InsufficientDataError(OrdpatError, ValueError):
    """Series too short for the requested operation."""


class EmptySeriesError(InsufficientDataError):
    """No usable samples at all."""
