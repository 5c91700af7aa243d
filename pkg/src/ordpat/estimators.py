"""Scikit-learn compatible wrappers around the ordinal kernel.

Two estimators cover the common entry points so the analysis composes
with pipelines, grid search and the rest of the sklearn ecosystem:

* :class:`OrdinalSymbolizer` turns a series into its sequence of ordinal
  pattern ranks (a stateless transformer).
* :class:`ForbiddenPatternDetector` fits the full determinism test on a
  series and exposes the verdict through fitted attributes.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from ._validation import as_float_series, check_dimension, check_tie_policy
from .analysis import baseline, classify
from .census import build_census, forbidden_count
from .errors import InvalidInputError
from .patterns import pattern_codes

__all__ = ["OrdinalSymbolizer", "ForbiddenPatternDetector"]


class OrdinalSymbolizer(BaseEstimator, TransformerMixin):
    """Transform a series into ordinal pattern ranks, one per window.

    The transform of a length-``n`` series is the length ``n - d + 1``
    integer sequence of lexicographic pattern ranks in ``[0, d!)``. A 2-D
    input is treated as a stack of independent series (one per row).

    Parameters
    ----------
    d : int, default=3
        Embedding dimension, between 2 and 10.
    tie_policy : {"stable", "reject"}, default="stable"
        Tie handling; ``reject`` raises on exact value ties.

    Examples
    --------
    >>> OrdinalSymbolizer(d=3).fit_transform([2.0, 1.0, 3.0, 4.0])
    array([2, 0])
    """

    def __init__(self, d: int = 3, tie_policy: str = "stable"):
        self.d = d
        self.tie_policy = tie_policy

    def fit(self, X, y=None):
        """Validate parameters; the transformer itself is stateless."""
        check_dimension(self.d)
        check_tie_policy(self.tie_policy)
        return self

    def transform(self, X) -> np.ndarray:
        """Pattern ranks for every window of ``X`` (rows, if 2-D)."""
        check_dimension(self.d)
        check_tie_policy(self.tie_policy)
        arr = np.asarray(getattr(X, "values", X), dtype=np.float64)
        if arr.ndim == 1:
            return pattern_codes(arr, self.d, self.tie_policy)
        if arr.ndim == 2:
            return np.stack(
                [pattern_codes(row, self.d, self.tie_policy) for row in arr]
            )
        raise InvalidInputError(f"expected a 1-D or 2-D input, got shape {arr.shape}")


class ForbiddenPatternDetector(BaseEstimator):
    """Determinism test for one scalar series, sklearn style.

    ``fit`` builds the pattern census of the series, generates a seeded
    surrogate baseline ensemble, and applies the order-of-magnitude rule.

    Parameters
    ----------
    d : int, default=5
        Embedding dimension.
    tie_policy : {"stable", "reject"}, default="stable"
    baseline_kind : {"uniform", "shuffle"}, default="uniform"
        Randomness null: fresh iid-uniform noise, or shuffles of the
        fitted series (which preserve its value distribution).
    n_surrogates : int, default=20
        Ensemble size.
    threshold : float, default=10.0
        Ratio at or above which the series is called deterministic.
    random_state : int, default=0
        Master seed for the surrogate ensemble.

    Attributes
    ----------
    census_ : PatternCensus
    forbidden_count_ : int
    baseline_ : BaselineEnsemble
    verdict_ : DeterminismVerdict
    ratio_ : float
    classification_ : str
        ``"deterministic"`` or ``"inconclusive"``.
    undersampled_ : bool
    """

    def __init__(
        self,
        d: int = 5,
        tie_policy: str = "stable",
        baseline_kind: str = "uniform",
        n_surrogates: int = 20,
        threshold: float = 10.0,
        random_state: int = 0,
    ):
        self.d = d
        self.tie_policy = tie_policy
        self.baseline_kind = baseline_kind
        self.n_surrogates = n_surrogates
        self.threshold = threshold
        self.random_state = random_state

    def fit(self, X, y=None):
        values = as_float_series(X, "X")
        self.census_ = build_census(values, self.d, self.tie_policy)
        self.forbidden_count_ = forbidden_count(self.census_)
        self.baseline_ = baseline(
            self.d,
            values.size,
            kind=self.baseline_kind,
            n_surrogates=self.n_surrogates,
            master_seed=self.random_state,
            source=values if self.baseline_kind == "shuffle" else None,
            tie_policy=self.tie_policy,
        )
        self.verdict_ = classify(self.forbidden_count_, self.baseline_, self.threshold)
        self.ratio_ = self.verdict_.ratio
        self.classification_ = self.verdict_.classification
        self.undersampled_ = self.verdict_.undersampled
        return self
