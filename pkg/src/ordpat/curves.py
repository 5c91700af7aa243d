"""Forbidden-count curves over growing prefixes and sliding windows.

Two views of how the forbidden-pattern count behaves in time:

* the growth curve ``n(d, N)``: forbidden count over the first ``N``
  samples, for a grid of prefix lengths. Deterministic series plateau at
  a positive level while random series decay to zero.
* the rolling trace: forbidden count of each ``W``-sample slice as the
  window slides, tracking time-varying randomness.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from ._validation import as_float_series
from .errors import InsufficientDataError, InvalidInputError
from .patterns import pattern_codes, window_count

__all__ = [
    "ForbiddenCurve",
    "RollingTrace",
    "forbidden_curve",
    "rolling_forbidden",
]


@dataclass(frozen=True)
class ForbiddenCurve:
    """Forbidden count versus prefix length, non-increasing by construction."""

    d: int
    lengths: np.ndarray
    forbidden: np.ndarray

    @property
    def points(self) -> list[tuple[int, int]]:
        return [(int(n), int(f)) for n, f in zip(self.lengths, self.forbidden)]

    @property
    def terminal_forbidden(self) -> int:
        """Forbidden count at the longest prefix."""
        return int(self.forbidden[-1])

    @property
    def decay_rate(self) -> float:
        """Fraction of the initial forbidden count lost along the curve.

        Zero when the first point is already zero; one when every initially
        missing pattern eventually appears. Lower decay means the absences
        are structural rather than finite-sample.
        """
        first = int(self.forbidden[0])
        if first == 0:
            return 0.0
        return 1.0 - int(self.forbidden[-1]) / first

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "lengths": [int(n) for n in self.lengths],
            "forbidden": [int(f) for f in self.forbidden],
            "terminal_forbidden": self.terminal_forbidden,
            "decay_rate": self.decay_rate,
        }


@dataclass(frozen=True)
class RollingTrace:
    """Forbidden count of each sliding window slice.

    ``end_indices[i]`` is the 0-based index of the last sample in slice
    ``i``; slices are ``window_len`` samples long and advance by ``step``.
    """

    d: int
    window_len: int
    step: int
    end_indices: np.ndarray
    forbidden: np.ndarray

    @property
    def points(self) -> list[tuple[int, int]]:
        return [(int(e), int(f)) for e, f in zip(self.end_indices, self.forbidden)]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "window_len": self.window_len,
            "step": self.step,
            "end_indices": [int(e) for e in self.end_indices],
            "forbidden": [int(f) for f in self.forbidden],
        }


def forbidden_curve(
    series,
    d: int,
    prefix_lengths,
    tie_policy: str = "stable",
) -> ForbiddenCurve:
    """Forbidden count over the first ``N`` samples for each ``N`` in a grid.

    The whole grid is served by one pass over the window codes: counts
    only ever grow as the prefix extends, so each point reuses all the
    work of the previous one and the curve is non-increasing by
    construction.

    Parameters
    ----------
    series : array_like or TimeSeries
    d : int
        Embedding dimension, ``2 <= d <= 10``.
    prefix_lengths : sequence of int
        Strictly increasing, each at least ``d``, the largest no longer
        than the series.
    tie_policy : {"stable", "reject"}
    """
    values = as_float_series(series)
    lengths = np.asarray(prefix_lengths, dtype=np.int64)
    if lengths.ndim != 1 or lengths.size == 0:
        raise InvalidInputError("prefix_lengths must be a non-empty 1-D sequence")
    if (np.diff(lengths) <= 0).any():
        raise InvalidInputError("prefix_lengths must be strictly increasing")
    if lengths[0] < d:
        raise InvalidInputError(f"every prefix length must be at least d={d}")
    if lengths[-1] > values.size:
        raise InvalidInputError(
            f"largest prefix length {int(lengths[-1])} exceeds series length {values.size}"
        )

    codes = pattern_codes(values[: int(lengths[-1])], d, tie_policy)
    total = factorial(d)
    counts = np.zeros(total, dtype=np.int64)
    distinct = 0
    forbidden = np.empty(lengths.size, dtype=np.int64)
    consumed = 0
    for i, n in enumerate(lengths):
        upto = window_count(int(n), d)
        segment = codes[consumed:upto]
        if segment.size:
            seen, seen_counts = np.unique(segment, return_counts=True)
            distinct += int((counts[seen] == 0).sum())
            counts[seen] += seen_counts
            consumed = upto
        forbidden[i] = total - distinct
    return ForbiddenCurve(d=d, lengths=lengths, forbidden=forbidden)


def rolling_forbidden(
    series,
    d: int,
    window_len: int,
    step: int = 1,
    tie_policy: str = "stable",
) -> RollingTrace:
    """Forbidden count of every ``window_len``-sample slice, stepped by ``step``.

    Equivalent to building a census per slice in isolation, but computed
    incrementally: the slice advances by retiring ``step`` window codes
    on the left and admitting ``step`` on the right while tracking the
    number of distinct codes.

    Raises
    ------
    InsufficientDataError
        If ``window_len`` exceeds the series length.
    """
    values = as_float_series(series)
    if not isinstance(window_len, (int, np.integer)) or isinstance(window_len, bool):
        raise InvalidInputError(f"window_len must be an integer, got {window_len!r}")
    if not isinstance(step, (int, np.integer)) or isinstance(step, bool):
        raise InvalidInputError(f"step must be an integer, got {step!r}")
    window_len = int(window_len)
    step = int(step)
    if window_len < d:
        raise InvalidInputError(f"window_len must be at least d={d}")
    if step < 1:
        raise InvalidInputError("step must be at least 1")
    if window_len > values.size:
        raise InsufficientDataError(
            f"window_len {window_len} exceeds series length {values.size}"
        )

    codes = pattern_codes(values, d, tie_policy).tolist()
    total = factorial(d)
    per_slice = window_count(window_len, d)
    n_points = (values.size - window_len) // step + 1

    counts = [0] * total
    distinct = 0
    for c in codes[:per_slice]:
        if counts[c] == 0:
            distinct += 1
        counts[c] += 1

    # Disjoint windows (step >= per_slice) swap whole slices; overlapping
    # ones exchange only the step-sized fringes.
    churn = min(step, per_slice)
    forbidden = np.empty(n_points, dtype=np.int64)
    forbidden[0] = total - distinct
    for p in range(1, n_points):
        start = (p - 1) * step
        for c in codes[start : start + churn]:
            counts[c] -= 1
            if counts[c] == 0:
                distinct -= 1
        admit = start + step + per_slice - churn
        for c in codes[admit : admit + churn]:
            if counts[c] == 0:
                distinct += 1
            counts[c] += 1
        forbidden[p] = total - distinct

    end_indices = np.arange(n_points, dtype=np.int64) * step + window_len - 1
    return RollingTrace(
        d=d,
        window_len=window_len,
        step=step,
        end_indices=end_indices,
        forbidden=forbidden,
    )
