"""Ordinal pattern extraction and integer coding.

An ordinal pattern describes the relative ranking of ``d`` consecutive
samples. It is written as the permutation of 1-based time indices listed
from the lowest sample value to the highest: the window ``[2.0, 1.0, 3.0]``
has pattern ``(2, 1, 3)`` because the second value is the smallest, the
first comes next and the third is the largest.

Patterns are keyed by their lexicographic rank among all ``d!``
permutations (the Lehmer code), giving a dense integer in ``[0, d!)`` that
indexes the count arrays used everywhere else in the package.

Exact value ties are resolved by the ``tie_policy``:

* ``"stable"`` (default): equal values are ordered by ascending time
  index, which is deterministic and keeps every window usable.
* ``"reject"``: any exact tie raises :class:`~ordpat.errors.TieError`.
"""

from __future__ import annotations

from math import factorial

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ._validation import as_float_series, check_dimension, check_tie_policy
from .errors import InsufficientDataError, InvalidInputError, TieError

__all__ = [
    "ordinal_pattern",
    "permutation_rank",
    "permutation_unrank",
    "pattern_codes",
    "window_count",
]


def window_count(n: int, d: int) -> int:
    """Number of overlapping length-``d`` windows in a series of length ``n``."""
    return n - d + 1


def ordinal_pattern(window, tie_policy: str = "stable") -> tuple[int, ...]:
    """Extract the ordinal pattern of a single window.

    Parameters
    ----------
    window : array_like
        Exactly ``d`` finite values, ``2 <= d <= 10``.
    tie_policy : {"stable", "reject"}
        How exact value ties are handled.

    Returns
    -------
    tuple of int
        Permutation of ``{1, ..., d}``: 1-based time indices sorted by
        ascending sample value.
    """
    check_tie_policy(tie_policy)
    arr = np.asarray(window, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidInputError(f"window must be one-dimensional, got shape {arr.shape}")
    d = check_dimension(arr.size)
    if not np.isfinite(arr).all():
        raise InvalidInputError("window contains non-finite values")

    order = np.argsort(arr, kind="stable")
    if tie_policy == "reject":
        ranked = arr[order]
        if (ranked[1:] == ranked[:-1]).any():
            raise TieError("window contains an exact value tie")
    return tuple(int(i) + 1 for i in order)


def permutation_rank(pattern) -> int:
    """Lexicographic rank of a pattern among all permutations of its size.

    ``(1, 2, 3) -> 0`` and ``(3, 2, 1) -> 5``; the rank is a bijection
    onto ``[0, d!)`` at fixed ``d``.
    """
    perm = tuple(int(p) for p in pattern)
    d = check_dimension(len(perm))
    if sorted(perm) != list(range(1, d + 1)):
        raise InvalidInputError(
            f"pattern must be a permutation of 1..{d}, got {pattern!r}"
        )
    rank = 0
    for k in range(d - 1):
        smaller_after = sum(1 for m in range(k + 1, d) if perm[m] < perm[k])
        rank += smaller_after * factorial(d - 1 - k)
    return rank


def permutation_unrank(d: int, code: int) -> tuple[int, ...]:
    """Inverse of :func:`permutation_rank` at dimension ``d``."""
    d = check_dimension(d)
    if not isinstance(code, (int, np.integer)) or isinstance(code, bool):
        raise InvalidInputError(f"code must be an integer, got {code!r}")
    code = int(code)
    if not 0 <= code < factorial(d):
        raise InvalidInputError(f"code must be in [0, {factorial(d)}), got {code}")
    remaining = list(range(1, d + 1))
    out = []
    for k in range(d):
        f = factorial(d - 1 - k)
        digit, code = divmod(code, f)
        out.append(remaining.pop(digit))
    return tuple(out)


def _embedding(values: np.ndarray, d: int) -> np.ndarray:
    if values.size < d:
        raise InsufficientDataError(
            f"series of length {values.size} is shorter than dimension {d}"
        )
    return sliding_window_view(values, d)


def pattern_codes(
    series,
    d: int,
    tie_policy: str = "stable",
    return_ties: bool = False,
):
    """Pattern ranks for every overlapping window of a series, at delay 1.

    This is the vectorised kernel behind censuses, curves and traces: one
    stable argsort per window row plus ``d*(d-1)/2`` columnwise
    comparisons yields the Lehmer rank of each window's pattern.

    Parameters
    ----------
    series : array_like or TimeSeries
        At least ``d`` finite samples.
    d : int
        Embedding dimension, ``2 <= d <= 10``.
    tie_policy : {"stable", "reject"}
    return_ties : bool
        When true, also return a boolean mask marking windows that
        contain at least one exact value tie.

    Returns
    -------
    codes : ndarray of int64, shape ``(n - d + 1,)``
    ties : ndarray of bool, same shape (only when ``return_ties``)
    """
    d = check_dimension(d)
    check_tie_policy(tie_policy)
    values = as_float_series(series)
    windows = _embedding(values, d)

    order = np.argsort(windows, axis=1, kind="stable")

    ranked = np.take_along_axis(windows, order, axis=1)
    ties = (ranked[:, 1:] == ranked[:, :-1]).any(axis=1)
    if tie_policy == "reject" and ties.any():
        first = int(np.argmax(ties))
        raise TieError(f"exact value tie in window starting at index {first}")

    n = order.shape[0]
    codes = np.zeros(n, dtype=np.int64)
    for k in range(d - 1):
        smaller_after = np.zeros(n, dtype=np.int64)
        for m in range(k + 1, d):
            smaller_after += order[:, m] < order[:, k]
        codes += smaller_after * factorial(d - 1 - k)

    if return_ties:
        return codes, ties
    return codes
