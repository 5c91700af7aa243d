"""ordpat: forbidden ordinal-pattern analysis for scalar time series.

The package detects deterministic structure in a series by counting which
of the d! possible ordinal patterns never occur. Random series eventually
visit every pattern; deterministic (typically chaotic) dynamics exclude
some forever, and the contrast against seeded surrogate baselines turns
that count into a classification.

Quick start::

    from ordpat import logistic_series, ForbiddenPatternDetector

    x = logistic_series(20_000, x0=0.3)
    det = ForbiddenPatternDetector(d=5).fit(x)
    det.forbidden_count_, det.ratio_, det.classification_
"""

from __future__ import annotations

__version__ = "0.1.0"

from . import errors
from .analysis import (
    BaselineEnsemble,
    DeterminismVerdict,
    DimensionResult,
    RollingParams,
    SeriesReport,
    baseline,
    classify,
    default_prefix_grid,
    full_report,
    undersampling_bound,
    undersampling_warning,
)
from .census import (
    OccurrencePdf,
    PatternCensus,
    build_census,
    forbidden_count,
    occurrence_pdf,
)
from .curves import ForbiddenCurve, RollingTrace, forbidden_curve, rolling_forbidden
from .estimators import ForbiddenPatternDetector, OrdinalSymbolizer
from .generators import (
    default_x0,
    derive_seed,
    derive_seeds,
    logistic_series,
    shuffle_surrogate,
    uniform_series,
)
from .ingest import TimeSeries, load_csv, slice_series
from .patterns import (
    ordinal_pattern,
    pattern_codes,
    permutation_rank,
    permutation_unrank,
    window_count,
)

__all__ = [
    "__version__",
    "errors",
    # patterns
    "ordinal_pattern",
    "permutation_rank",
    "permutation_unrank",
    "pattern_codes",
    "window_count",
    # census
    "PatternCensus",
    "OccurrencePdf",
    "build_census",
    "forbidden_count",
    "occurrence_pdf",
    # curves
    "ForbiddenCurve",
    "RollingTrace",
    "forbidden_curve",
    "rolling_forbidden",
    # generators
    "logistic_series",
    "uniform_series",
    "shuffle_surrogate",
    "derive_seed",
    "derive_seeds",
    "default_x0",
    # ingest
    "TimeSeries",
    "load_csv",
    "slice_series",
    # analysis
    "BaselineEnsemble",
    "DeterminismVerdict",
    "RollingParams",
    "DimensionResult",
    "SeriesReport",
    "baseline",
    "classify",
    "full_report",
    "default_prefix_grid",
    "undersampling_bound",
    "undersampling_warning",
    # estimators
    "OrdinalSymbolizer",
    "ForbiddenPatternDetector",
]
