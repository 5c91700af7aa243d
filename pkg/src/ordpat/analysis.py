"""Statistical layer: surrogate baselines, the determinism rule, reports.

A series is called deterministic when its forbidden-pattern count sits at
least an order of magnitude above what equivalent random series produce.
The baseline side of that ratio is an ensemble of seeded surrogates
(iid-uniform, or shuffles of the data itself); the report side assembles
censuses, growth curves, occurrence PDFs and verdicts per dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from ._validation import as_float_series, check_dimension, check_seed, check_tie_policy
from .census import build_census, forbidden_count, occurrence_pdf
from .curves import RollingTrace, forbidden_curve, rolling_forbidden
from .errors import InsufficientDataError, InvalidInputError, OrdpatError
from .generators import derive_seed, derive_seeds, shuffle_surrogate, uniform_series

__all__ = [
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
    "tie_warning",
]

BASELINE_KINDS = ("uniform", "shuffle")

DEFAULT_THRESHOLD = 10.0
DEFAULT_SURROGATES = 20


def undersampling_bound(d: int) -> int:
    """Practical minimum series length for dimension ``d``: ``(d+1)!``.

    Guaranteeing that every pattern *can* appear needs only
    ``n - d + 1 > d!`` windows; the stricter bound leaves headroom so
    that missing patterns are evidence rather than sampling noise.
    """
    return factorial(d + 1)


def undersampling_warning(d: int, n: int) -> dict | None:
    """Machine-readable warning when ``n`` is at or below the bound, else None."""
    bound = undersampling_bound(d)
    if n > bound:
        return None
    return {
        "code": "undersampled",
        "d": int(d),
        "n": int(n),
        "bound": bound,
        "message": f"series length {n} <= (d+1)! = {bound} for d={d}; "
        "forbidden counts may reflect undersampling",
    }


def tie_warning(d: int, ties_seen: int, windows_total: int) -> dict | None:
    if ties_seen == 0:
        return None
    return {
        "code": "ties",
        "d": int(d),
        "ties_seen": int(ties_seen),
        "windows_total": int(windows_total),
        "message": f"{ties_seen} of {windows_total} windows contain exact value "
        f"ties at d={d}; ranking used the stable tie policy",
    }


@dataclass(frozen=True)
class BaselineEnsemble:
    """Forbidden counts of M surrogate series plus summary statistics."""

    d: int
    n: int
    kind: str
    members: np.ndarray
    master_seed: int

    @property
    def m(self) -> int:
        return int(self.members.size)

    @property
    def mean(self) -> float:
        return float(self.members.mean())

    @property
    def std(self) -> float:
        """Population standard deviation of the members."""
        return float(self.members.std())

    @property
    def max(self) -> int:
        return int(self.members.max())

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "kind": self.kind,
            "m": self.m,
            "members": [int(v) for v in self.members],
            "mean": self.mean,
            "std": self.std,
            "max": self.max,
            "master_seed": self.master_seed,
        }


@dataclass(frozen=True)
class DeterminismVerdict:
    """Outcome of the order-of-magnitude rule for one series and dimension.

    ``ratio`` is the observed forbidden count over the baseline mean with
    the denominator floored at one, which keeps the rule usable in the
    regime where random baselines hit zero.
    """

    observed: int
    baseline: BaselineEnsemble
    ratio: float
    threshold: float
    classification: str
    undersampled: bool

    def to_dict(self) -> dict:
        return {
            "observed": self.observed,
            "baseline": self.baseline.to_dict(),
            "ratio": self.ratio,
            "threshold": self.threshold,
            "classification": self.classification,
            "undersampled": self.undersampled,
        }


def baseline(
    d: int,
    n: int,
    kind: str = "uniform",
    n_surrogates: int = DEFAULT_SURROGATES,
    master_seed: int = 0,
    source=None,
    tie_policy: str = "stable",
) -> BaselineEnsemble:
    """Forbidden counts of ``n_surrogates`` random series of length ``n``.

    Member ``i`` is generated with the seed ``derive_seed(master_seed, i)``,
    so the ensemble is reproducible and independent of evaluation order.
    ``kind="shuffle"`` permutes ``source`` instead of drawing fresh noise
    and requires ``n == len(source)``.
    """
    d = check_dimension(d)
    check_tie_policy(tie_policy)
    master_seed = check_seed(master_seed, "master_seed")
    if n_surrogates < 1:
        raise InvalidInputError(f"n_surrogates must be at least 1, got {n_surrogates}")
    if kind not in BASELINE_KINDS:
        raise InvalidInputError(f"kind must be one of {BASELINE_KINDS}, got {kind!r}")
    if kind == "shuffle":
        if source is None:
            raise InvalidInputError("shuffle baseline requires a source series")
        source_values = as_float_series(source, "source")
        if n != source_values.size:
            raise InvalidInputError(
                f"shuffle baseline length n={n} must equal the source length "
                f"{source_values.size}"
            )

    members = np.empty(n_surrogates, dtype=np.int64)
    for i, seed in enumerate(derive_seeds(master_seed, n_surrogates)):
        if kind == "uniform":
            surrogate = uniform_series(n, seed=seed)
        else:
            surrogate = shuffle_surrogate(source, seed=seed)
        members[i] = forbidden_count(build_census(surrogate, d, tie_policy))
    return BaselineEnsemble(d=d, n=int(n), kind=kind, members=members, master_seed=master_seed)


def classify(
    observed: int,
    baseline_ensemble: BaselineEnsemble,
    threshold: float = DEFAULT_THRESHOLD,
) -> DeterminismVerdict:
    """Apply the order-of-magnitude determinism rule.

    ``deterministic`` when ``observed / max(baseline mean, 1) >= threshold``,
    else ``inconclusive``. An ``undersampled`` flag is set when the series
    length is at or below ``(d+1)!``.
    """
    observed = int(observed)
    if observed < 0:
        raise InvalidInputError(f"observed forbidden count must be >= 0, got {observed}")
    if threshold <= 0:
        raise InvalidInputError(f"threshold must be positive, got {threshold}")
    ratio = observed / max(baseline_ensemble.mean, 1.0)
    return DeterminismVerdict(
        observed=observed,
        baseline=baseline_ensemble,
        ratio=ratio,
        threshold=float(threshold),
        classification="deterministic" if ratio >= threshold else "inconclusive",
        undersampled=baseline_ensemble.n <= undersampling_bound(baseline_ensemble.d),
    )


def default_prefix_grid(d: int, n: int) -> np.ndarray:
    """Logarithmic grid of up to 24 prefix lengths for the growth curve.

    Spans ``max(10 d, (d+1)! + 1)`` to ``n``; collapses to the single
    point ``n`` when the series is too short to fit the span.
    """
    d = check_dimension(d)
    n = int(n)
    if n < d:
        raise InsufficientDataError(f"series length {n} is shorter than d={d}")
    lo = max(10 * d, undersampling_bound(d) + 1)
    if lo >= n:
        return np.array([n], dtype=np.int64)
    grid = np.unique(
        np.round(np.logspace(np.log10(lo), np.log10(n), 24)).astype(np.int64)
    )
    grid[-1] = n
    return grid


@dataclass(frozen=True)
class RollingParams:
    """Parameters for the optional rolling trace of a report."""

    d: int
    window_len: int
    step: int = 1


@dataclass
class DimensionResult:
    """All per-dimension products of a report, or a structured error."""

    d: int
    census_summary: dict | None = None
    curve: object | None = None
    pdf: object | None = None
    verdict: DeterminismVerdict | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "error": self.error,
            "census": self.census_summary,
            "curve": self.curve.to_dict() if self.curve is not None else None,
            "pdf": self.pdf.to_dict() if self.pdf is not None else None,
            "verdict": self.verdict.to_dict() if self.verdict is not None else None,
        }


@dataclass
class SeriesReport:
    """Per-dimension analyses of one series, plus an optional rolling trace."""

    input_meta: dict
    params: dict
    results: list[DimensionResult] = field(default_factory=list)
    rolling: RollingTrace | None = None
    warnings: list[dict] = field(default_factory=list)

    def result_for(self, d: int) -> DimensionResult:
        for res in self.results:
            if res.d == d:
                return res
        raise KeyError(f"no result for d={d}")

    def to_dict(self) -> dict:
        return {
            "input": self.input_meta,
            "params": self.params,
            "warnings": self.warnings,
            "per_d": [res.to_dict() for res in self.results],
            "rolling": self.rolling.to_dict() if self.rolling is not None else None,
        }


def full_report(
    series,
    d_list,
    prefixes=None,
    rolling: RollingParams | None = None,
    baseline_kind: str = "uniform",
    n_surrogates: int = DEFAULT_SURROGATES,
    master_seed: int = 0,
    threshold: float = DEFAULT_THRESHOLD,
    tie_policy: str = "stable",
) -> SeriesReport:
    """Census, growth curve, occurrence PDF and verdict for each dimension.

    Parameters
    ----------
    series : array_like or TimeSeries
    d_list : sequence of int
        Dimensions to analyse, each appearing once; the series must be at
        least as long as the largest.
    prefixes : sequence of int, callable, or None
        Curve grid: an explicit grid used for every dimension, a callable
        ``(d, n) -> grid``, or None for :func:`default_prefix_grid`.
    rolling : RollingParams, optional
        When given, a rolling trace is attached to the report.
    baseline_kind : {"uniform", "shuffle"}
    n_surrogates, master_seed, threshold :
        Baseline ensemble controls. The ensemble for dimension ``d`` uses
        the master seed ``derive_seed(master_seed, d)``, so per-dimension
        results do not depend on the order of ``d_list``.
    tie_policy : {"stable", "reject"}

    Undersampling and tie contamination never abort the report; they are
    recorded in ``warnings``. A failure specific to one dimension is
    captured as that dimension's ``error`` instead of being raised.
    """
    values = as_float_series(series)
    dims = [check_dimension(d) for d in d_list]
    if not dims:
        raise InvalidInputError("d_list must not be empty")
    if len(set(dims)) != len(dims):
        raise InvalidInputError(f"d_list contains duplicates: {d_list}")
    n = int(values.size)
    if n < max(dims):
        raise InsufficientDataError(
            f"series length {n} is shorter than the largest dimension {max(dims)}"
        )
    master_seed = check_seed(master_seed, "master_seed")

    params = {
        "d_list": dims,
        "n": n,
        "baseline_kind": baseline_kind,
        "n_surrogates": int(n_surrogates),
        "master_seed": master_seed,
        "threshold": float(threshold),
        "tie_policy": tie_policy,
        "prefixes": "default-log24" if prefixes is None or callable(prefixes) else [int(p) for p in prefixes],
        "rolling": (
            {"d": rolling.d, "window_len": rolling.window_len, "step": rolling.step}
            if rolling is not None
            else None
        ),
    }

    report = SeriesReport(input_meta=dict(getattr(series, "meta", {}) or {}), params=params)
    report.input_meta.setdefault("n", n)

    for d in dims:
        result = DimensionResult(d=d)
        try:
            census = build_census(values, d, tie_policy)
            if prefixes is None:
                grid = default_prefix_grid(d, n)
            elif callable(prefixes):
                grid = prefixes(d, n)
            else:
                grid = prefixes
            curve = forbidden_curve(values, d, grid, tie_policy)
            pdf = occurrence_pdf(census)
            ensemble = baseline(
                d,
                n,
                kind=baseline_kind,
                n_surrogates=n_surrogates,
                master_seed=derive_seed(master_seed, d),
                source=values if baseline_kind == "shuffle" else None,
                tie_policy=tie_policy,
            )
            verdict = classify(forbidden_count(census), ensemble, threshold)
        except OrdpatError as exc:
            result.error = f"{type(exc).__name__}: {exc}"
            report.results.append(result)
            continue

        result.census_summary = census.summary()
        result.curve = curve
        result.pdf = pdf
        result.verdict = verdict
        report.results.append(result)

        warning = undersampling_warning(d, n)
        if warning:
            report.warnings.append(warning)
        warning = tie_warning(d, census.ties_seen, census.windows_total)
        if warning:
            report.warnings.append(warning)

    if rolling is not None:
        report.rolling = rolling_forbidden(
            values, rolling.d, rolling.window_len, rolling.step, tie_policy
        )

    return report
