"""Seeded synthetic series: logistic orbits, iid noise, shuffle surrogates.

All generators are deterministic functions of their arguments. Random
draws come from numpy's PCG64 via ``default_rng``; the generator name and
seed are recorded in the output metadata so any series can be
regenerated. Ensembles derive per-member seeds from one master seed with
:func:`derive_seeds`, so members are independent of evaluation order.
"""

from __future__ import annotations

import numpy as np

from ._validation import as_float_series, check_seed
from .errors import DegenerateSeedError, InsufficientDataError, InvalidInputError
from .ingest import TimeSeries

__all__ = [
    "logistic_series",
    "uniform_series",
    "shuffle_surrogate",
    "derive_seed",
    "derive_seeds",
    "default_x0",
    "DEGENERATE_X0",
]

# x0 values whose orbit is trivial: the endpoints map to 0, 0.5 maps onto
# the absorbing endpoint in one step, 0.75 is the fixed point.
DEGENERATE_X0 = (0.0, 0.5, 0.75, 1.0)

RNG_ALGORITHM = "PCG64"


def _check_length(n) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise InvalidInputError(f"n must be an integer, got {n!r}")
    n = int(n)
    if n < 1:
        raise InvalidInputError(f"n must be at least 1, got {n}")
    return n


def derive_seed(master_seed: int, key: int) -> int:
    """Deterministic 64-bit child seed for ``key`` under a master seed.

    The child is ``SeedSequence(master_seed, spawn_key=(key,))``, and the
    returned integer is the first 64 bits of its generated state. Children
    for distinct keys are statistically independent streams.
    """
    master_seed = check_seed(master_seed, "master_seed")
    child = np.random.SeedSequence(entropy=master_seed, spawn_key=(int(key),))
    lo, hi = child.generate_state(2, np.uint32)
    return int(lo) | (int(hi) << 32)


def derive_seeds(master_seed: int, count: int) -> list[int]:
    """Per-member seeds for an ensemble: ``derive_seed(master, i)`` for each i."""
    if count < 1:
        raise InvalidInputError(f"count must be at least 1, got {count}")
    return [derive_seed(master_seed, i) for i in range(count)]


def default_x0(seed: int) -> float:
    """Seed-derived logistic initial condition in (0.1, 0.9)."""
    # kept well inside the chaotic band, away from the degenerate points
    u = float(np.random.default_rng(seed).random())
    return 0.1 + 0.8 * u


def logistic_series(
    n: int,
    x0: float | None = None,
    seed: int = 0,
    transient: int = 1000,
) -> TimeSeries:
    """Orbit of ``x -> 4 x (1 - x)`` after discarding a transient.

    Parameters
    ----------
    n : int
        Number of recorded samples.
    x0 : float, optional
        Initial condition in (0, 1), excluding 0.5 and 0.75 whose orbits
        collapse. When omitted it is derived from ``seed`` and lands in
        (0.1, 0.9).
    seed : int
        Only used to derive ``x0`` when it is not given.
    transient : int
        Iterations discarded before recording, to shed the dependence on
        the initial condition.

    Returns
    -------
    TimeSeries
        ``n`` samples in [0, 1]; bit-identical for identical arguments.
    """
    n = _check_length(n)
    seed = check_seed(seed)
    if not isinstance(transient, (int, np.integer)) or isinstance(transient, bool):
        raise InvalidInputError(f"transient must be an integer, got {transient!r}")
    transient = int(transient)
    if transient < 0:
        raise InvalidInputError(f"transient must be non-negative, got {transient}")

    if x0 is None:
        x0 = default_x0(seed)
    x0 = float(x0)
    if not 0.0 < x0 < 1.0 or x0 in DEGENERATE_X0:
        raise DegenerateSeedError(
            f"x0={x0} yields a degenerate orbit; need x0 in (0, 1) "
            f"excluding {DEGENERATE_X0[1:3]}"
        )

    x = x0
    for _ in range(transient):
        x = 4.0 * x * (1.0 - x)
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        out[i] = x
        x = 4.0 * x * (1.0 - x)
    meta = {
        "source": "synth:logistic",
        "n": n,
        "x0": x0,
        "transient": transient,
        "seed": seed,
    }
    return TimeSeries(values=out, meta=meta)


def uniform_series(n: int, seed: int = 0) -> TimeSeries:
    """``n`` iid samples uniform on (0, 1), reproducible per seed."""
    n = _check_length(n)
    seed = check_seed(seed)
    values = np.random.default_rng(seed).random(n)
    meta = {
        "source": "synth:uniform",
        "n": n,
        "seed": seed,
        "rng": RNG_ALGORITHM,
    }
    return TimeSeries(values=values, meta=meta)


def shuffle_surrogate(source, seed: int = 0) -> TimeSeries:
    """Uniformly random permutation of the source samples.

    Preserves the value multiset exactly while destroying temporal order,
    which makes it the distribution-matched randomness null. Timestamps,
    if any, are dropped: they no longer describe the sample order.
    """
    seed = check_seed(seed)
    values = as_float_series(source, "source")
    if values.size < 2:
        raise InsufficientDataError("shuffle surrogate needs at least 2 samples")
    shuffled = np.random.default_rng(seed).permutation(values)
    meta = {
        "source": "synth:shuffle",
        "n": int(values.size),
        "seed": seed,
        "rng": RNG_ALGORITHM,
    }
    parent = getattr(source, "meta", None)
    if parent:
        meta["shuffled_from"] = parent.get("source", "unknown")
    return TimeSeries(values=shuffled, meta=meta)
