"""Input validation helpers shared across the package."""

from __future__ import annotations

import numpy as np

from .errors import InsufficientDataError, InvalidInputError

MIN_DIMENSION = 2
MAX_DIMENSION = 10  # dense count arrays of d! entries stay cheap up to here

TIE_POLICIES = ("stable", "reject")


def check_dimension(d) -> int:
    """Validate an embedding dimension and return it as a plain int."""
    if not isinstance(d, (int, np.integer)) or isinstance(d, bool):
        raise InvalidInputError(f"dimension must be an integer, got {d!r}")
    d = int(d)
    if not MIN_DIMENSION <= d <= MAX_DIMENSION:
        raise InvalidInputError(
            f"dimension must be in [{MIN_DIMENSION}, {MAX_DIMENSION}], got {d}"
        )
    return d


def check_tie_policy(tie_policy: str) -> str:
    if tie_policy not in TIE_POLICIES:
        raise InvalidInputError(
            f"tie_policy must be one of {TIE_POLICIES}, got {tie_policy!r}"
        )
    return tie_policy


def as_float_series(x, name: str = "series") -> np.ndarray:
    """Coerce a series-like object to a finite, 1-D float64 array.

    Accepts anything with a ``values`` attribute (TimeSeries, pandas
    objects) or a plain array-like.
    """
    values = getattr(x, "values", x)
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidInputError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise InsufficientDataError(f"{name} is empty")
    if not np.isfinite(arr).all():
        raise InvalidInputError(f"{name} contains non-finite values")
    return arr


def check_seed(seed, name: str = "seed") -> int:
    """Validate a 64-bit-range integer seed."""
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise InvalidInputError(f"{name} must be an integer, got {seed!r}")
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise InvalidInputError(f"{name} must fit in 64 bits, got {seed}")
    return seed
