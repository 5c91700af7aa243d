"""Loading and slicing scalar time series from delimited text files.

Parsing is locale-independent: the decimal separator is the period and
nothing else, thousands separators are rejected, dates are ISO-8601
(``YYYY-MM-DD``). Rows whose value (or date, when one is requested)
cannot be parsed are skipped and counted, never silently dropped.
"""

from __future__ import annotations

import csv
import datetime as dt
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    EmptySeriesError,
    InvalidInputError,
    OrderingError,
    SchemaError,
)

__all__ = ["TimeSeries", "load_csv", "slice_series"]

ORDER_POLICIES = ("require-ascending", "sort-by-date")


@dataclass(eq=False)
class TimeSeries:
    """An ordered sequence of finite samples, optionally dated.

    Attributes
    ----------
    values : ndarray of float64
        Time-ascending samples; stored read-only.
    timestamps : tuple of datetime.date, optional
        One date per sample, strictly increasing.
    meta : dict
        Provenance: source label, column, row accounting, generator
        parameters. Free-form but JSON-serialisable.
    """

    values: np.ndarray
    timestamps: tuple[dt.date, ...] | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.float64)
        if arr.ndim != 1:
            raise InvalidInputError(f"values must be one-dimensional, got shape {arr.shape}")
        if arr.size == 0:
            raise EmptySeriesError("a TimeSeries needs at least one sample")
        if not np.isfinite(arr).all():
            raise InvalidInputError("values contain non-finite entries")
        arr.setflags(write=False)
        self.values = arr
        if self.timestamps is not None:
            stamps = tuple(self.timestamps)
            if len(stamps) != arr.size:
                raise InvalidInputError(
                    f"{len(stamps)} timestamps for {arr.size} values"
                )
            for a, b in zip(stamps, stamps[1:]):
                if b <= a:
                    raise OrderingError(f"timestamps not strictly increasing at {b}")
            self.timestamps = stamps

    def __len__(self) -> int:
        return int(self.values.size)


def _parse_value(token: str) -> float | None:
    token = token.strip()
    if not token or "_" in token:
        return None
    try:
        value = float(token)
    except ValueError:
        return None
    if not np.isfinite(value):
        return None
    return value


def _parse_date(token: str) -> dt.date | None:
    try:
        return dt.date.fromisoformat(token.strip())
    except ValueError:
        return None


def _resolve_column(spec, header: list[str] | None, width: int, what: str) -> int:
    if isinstance(spec, str):
        if header is None:
            raise SchemaError(f"{what} {spec!r} requires a header row")
        try:
            return header.index(spec)
        except ValueError:
            raise SchemaError(f"{what} {spec!r} not found in header {header}") from None
    if isinstance(spec, bool) or not isinstance(spec, (int, np.integer)):
        raise SchemaError(f"{what} must be a name or 0-based index, got {spec!r}")
    idx = int(spec)
    if not 0 <= idx < width:
        raise SchemaError(f"{what} index {idx} out of range for {width} columns")
    return idx


def load_csv(
    path,
    column,
    date_column=None,
    order_policy: str = "require-ascending",
    delimiter: str = ",",
    header: bool | None = None,
) -> TimeSeries:
    """Extract one numeric column (and optionally a date column) from a file.

    Parameters
    ----------
    path : str or Path
        UTF-8 delimited text file.
    column : str or int
        Column holding the values, by header name or 0-based position.
    date_column : str or int, optional
        ISO-8601 date column; enables ordering checks and dated outputs.
    order_policy : {"require-ascending", "sort-by-date"}
        With dates present, either verify they are strictly increasing or
        reorder the rows by date before extraction.
    delimiter : str
        Field separator, comma by default.
    header : bool, optional
        Whether the first row is a header. Defaults to auto-detection:
        a header is assumed when any referenced cell of the first row
        does not parse. Column names always imply a header.

    Raises
    ------
    SchemaError
        Column missing, or ``sort-by-date`` without a date column.
    OrderingError
        ``require-ascending`` violated, or duplicate dates.
    EmptySeriesError
        No row yielded a usable value.
    """
    if order_policy not in ORDER_POLICIES:
        raise InvalidInputError(
            f"order_policy must be one of {ORDER_POLICIES}, got {order_policy!r}"
        )
    if order_policy == "sort-by-date" and date_column is None:
        raise SchemaError("sort-by-date requires a date_column")

    with open(path, newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh, delimiter=delimiter)]
    if not rows:
        raise EmptySeriesError(f"{path} contains no rows")

    if header is None:
        if isinstance(column, str) or isinstance(date_column, str):
            header = True
        else:
            # headerless only if every referenced cell of row 0 parses
            probe = rows[0]
            idx = int(column)
            ok = idx < len(probe) and _parse_value(probe[idx]) is not None
            if ok and date_column is not None:
                didx = int(date_column)
                ok = didx < len(probe) and _parse_date(probe[didx]) is not None
            header = not ok

    header_row = [c.strip() for c in rows[0]] if header else None
    data_rows = rows[1:] if header else rows
    width = len(header_row) if header_row else (len(data_rows[0]) if data_rows else 0)
    col = _resolve_column(column, header_row, width, "column")
    date_col = (
        _resolve_column(date_column, header_row, width, "date_column")
        if date_column is not None
        else None
    )

    accepted: list[float] = []
    dates: list[dt.date] = []
    skipped = 0
    for row in data_rows:
        if col >= len(row):
            skipped += 1
            continue
        value = _parse_value(row[col])
        if value is None:
            skipped += 1
            continue
        if date_col is not None:
            if date_col >= len(row):
                skipped += 1
                continue
            date = _parse_date(row[date_col])
            if date is None:
                skipped += 1
                continue
            dates.append(date)
        accepted.append(value)

    if not accepted:
        raise EmptySeriesError(f"no usable rows in {path}")

    timestamps: tuple[dt.date, ...] | None = None
    if date_col is not None:
        if order_policy == "sort-by-date":
            order = sorted(range(len(accepted)), key=dates.__getitem__)
            accepted = [accepted[i] for i in order]
            dates = [dates[i] for i in order]
        timestamps = tuple(dates)

    meta = {
        "source": str(path),
        "column": column if isinstance(column, str) else int(column),
        "accepted": len(accepted),
        "skipped": skipped,
    }
    # strictly-increasing timestamps are enforced by the constructor; under
    # require-ascending that check IS the policy, under sort-by-date it
    # rejects duplicate dates
    return TimeSeries(values=np.array(accepted), timestamps=timestamps, meta=meta)


def slice_series(series: TimeSeries, start: int, length: int) -> TimeSeries:
    """Contiguous sub-series of ``length`` samples starting at ``start``.

    Timestamps travel with their samples and metadata is carried over
    unchanged, so slicing composes: slicing a slice equals one slice with
    summed offsets.
    """
    n = len(series)
    start = int(start)
    length = int(length)
    if start < 0 or length < 1 or start + length > n:
        raise InvalidInputError(
            f"slice [{start}, {start + length}) out of range for length {n}"
        )
    stamps = (
        series.timestamps[start : start + length]
        if series.timestamps is not None
        else None
    )
    return TimeSeries(
        values=series.values[start : start + length].copy(),
        timestamps=stamps,
        meta=dict(series.meta),
    )
