"""Pattern censuses: occurrence counts over all d! patterns of a series.

A census is the full table of how often each of the ``d!`` possible
ordinal patterns occurs among the ``n - d + 1`` overlapping windows of a
series. Patterns with a zero count are the *forbidden* patterns of that
sample: persistent absence signals deterministic structure, transient
absence is a finite-sample effect.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .errors import InsufficientDataError
from .patterns import pattern_codes

__all__ = [
    "PatternCensus",
    "OccurrencePdf",
    "build_census",
    "forbidden_count",
    "occurrence_pdf",
]


@dataclass(frozen=True)
class PatternCensus:
    """Occurrence count per pattern rank, plus window bookkeeping.

    Attributes
    ----------
    d : int
        Embedding dimension.
    counts : ndarray of int64, length ``d!``
        ``counts[code]`` is the number of windows whose pattern has
        lexicographic rank ``code``. Sums to ``windows_total``.
    windows_total : int
        Number of windows scanned (``n - d + 1`` for a full series).
    ties_seen : int
        Number of windows containing at least one exact value tie.
    """

    d: int
    counts: np.ndarray
    windows_total: int
    ties_seen: int

    @property
    def distinct_patterns(self) -> int:
        """Number of patterns observed at least once."""
        return int(np.count_nonzero(self.counts))

    def missing_patterns(self) -> np.ndarray:
        """Ranks of the patterns that never occurred."""
        return np.flatnonzero(self.counts == 0)

    def summary(self) -> dict:
        return {
            "d": self.d,
            "windows_total": self.windows_total,
            "ties_seen": self.ties_seen,
            "distinct_patterns": self.distinct_patterns,
            "forbidden_count": forbidden_count(self),
        }


@dataclass(frozen=True)
class OccurrencePdf:
    """Distribution of pattern multiplicities over the visited patterns.

    ``probability[i]`` is the fraction of visited patterns that occur
    exactly ``support[i]`` times; the support covers ``k >= 1`` only and
    the probabilities sum to one. Never-seen patterns are reported
    separately in ``zero_count`` (they are the forbidden count, and a
    log-log plot of the PDF could not include them anyway).
    """

    d: int
    support: np.ndarray
    probability: np.ndarray
    zero_count: int

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "support": [int(k) for k in self.support],
            "probability": [float(p) for p in self.probability],
            "zero_count": self.zero_count,
        }


def build_census(series, d: int, tie_policy: str = "stable") -> PatternCensus:
    """Count every pattern over all overlapping windows at delay 1.

    Parameters
    ----------
    series : array_like or TimeSeries
        At least ``d`` finite samples.
    d : int
        Embedding dimension, ``2 <= d <= 10``.
    tie_policy : {"stable", "reject"}

    Raises
    ------
    InsufficientDataError
        If the series is shorter than ``d``.
    """
    codes, ties = pattern_codes(series, d, tie_policy, return_ties=True)
    counts = np.bincount(codes, minlength=factorial(d))
    return PatternCensus(
        d=d,
        counts=counts,
        windows_total=int(codes.size),
        ties_seen=int(ties.sum()),
    )


def forbidden_count(census: PatternCensus) -> int:
    """Number of patterns with a zero count: ``d!`` minus patterns seen."""
    return int(np.count_nonzero(census.counts == 0))


def occurrence_pdf(census: PatternCensus) -> OccurrencePdf:
    """Histogram of pattern multiplicities, normalised over visited patterns."""
    if census.windows_total < 1:
        raise InsufficientDataError("census covers no windows")
    visited = census.counts[census.counts > 0]
    support, freq = np.unique(visited, return_counts=True)
    return OccurrencePdf(
        d=census.d,
        support=support.astype(np.int64),
        probability=freq / visited.size,
        zero_count=forbidden_count(census),
    )
