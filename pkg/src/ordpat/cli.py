"""Command-line front door: synthesis, analysis, PDFs, traces, baselines.

Every command writes plot-ready CSV or JSON plus a ``<out>.run.json``
sidecar carrying the fully resolved run configuration (seeds included).
Re-running the argv reconstructed from that sidecar, see
:func:`argv_from_config`, reproduces every output byte for byte.

Exit codes: 0 success (warnings allowed), 2 invalid input or flags,
3 insufficient data.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import __version__
from .analysis import (
    baseline,
    full_report,
    tie_warning,
    undersampling_bound,
    undersampling_warning,
)
from .census import build_census, occurrence_pdf
from .curves import rolling_forbidden
from .errors import InsufficientDataError, InvalidInputError, OrdpatError
from .generators import default_x0, logistic_series, shuffle_surrogate, uniform_series
from .ingest import load_csv

SCHEMA_VERSION = "1"

# flags whose name does not follow mechanically from the config key
_FLAG_BY_KEY = {"d_list": "--d", "d": "--d", "baseline_kind": "--baseline", "window_len": "--window"}


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------


def _resolve_seed(value: int | None) -> int:
    """--seed flag, then the ORDPAT_SEED environment variable, then 0."""
    if value is not None:
        return value
    env = os.environ.get("ORDPAT_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise InvalidInputError(f"ORDPAT_SEED must be an integer, got {env!r}") from None


def _parse_column(column: str):
    return int(column) if column.isdigit() else column


def _d_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one dimension")
    return values


def _sibling(path, suffix: str) -> Path:
    return Path(path).with_suffix(suffix)


def _write_csv(path, header, rows) -> None:
    # csv defaults to CRLF line endings, as RFC 4180 wants
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _write_json(path, doc) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(doc, indent=2))
        fh.write("\n")


def _run_config(subcommand: str, params: dict) -> dict:
    return {
        "tool": "ordpat",
        "version": __version__,
        "subcommand": subcommand,
        "params": params,
    }


def _write_sidecar(out_path, run_config: dict, meta: dict) -> None:
    doc = {
        "kind": "run",
        "schema_version": SCHEMA_VERSION,
        "run_config": run_config,
        "meta": meta,
    }
    _write_json(str(out_path) + ".run.json", doc)


def argv_from_config(run_config: dict) -> list[str]:
    """Rebuild the argument vector that reproduces a recorded run.

    The mapping is mechanical: each ``params`` key becomes ``--key`` with
    underscores dashed (special-cased for ``--d``, ``--baseline`` and
    ``--window``), lists become comma-joined values, and the synth kind
    is the positional argument. Feeding the result back to :func:`main`
    regenerates every output byte for byte.
    """
    params = dict(run_config["params"])
    subcommand = run_config["subcommand"]
    argv = [subcommand]
    if subcommand == "synth":
        argv.append(params.pop("kind"))
    for key, value in params.items():
        if value is None:
            continue
        flag = _FLAG_BY_KEY.get(key, "--" + key.replace("_", "-"))
        if isinstance(value, bool):
            if value:
                argv.append(flag)
        elif isinstance(value, (list, tuple)):
            argv.extend([flag, ",".join(str(v) for v in value)])
        else:
            argv.extend([flag, str(value)])
    return argv


def _warn(message: str) -> None:
    print(f"ordpat: warning: {message}", file=sys.stderr)


def _emit_warnings(warnings: list[dict]) -> None:
    for warning in warnings:
        _warn(warning["message"])


def _note_dimension_range(dims) -> None:
    for d in dims:
        if not 4 <= d <= 6:
            print(
                f"ordpat: note: d={d} is outside the recommended range 4..6",
                file=sys.stderr,
            )


def _load_input(args):
    return load_csv(
        args.input,
        _parse_column(args.column),
        date_column=getattr(args, "date_column", None),
        order_policy=getattr(args, "order_policy", "require-ascending"),
        delimiter=args.delimiter,
    )


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_synth(args) -> int:
    seed = _resolve_seed(args.seed)
    if args.kind == "logistic":
        x0 = args.x0 if args.x0 is not None else default_x0(seed)
        series = logistic_series(args.n, x0=x0, seed=seed, transient=args.transient)
        params = {
            "kind": "logistic",
            "n": args.n,
            "x0": x0,
            "transient": args.transient,
            "seed": seed,
            "out": str(args.out),
        }
    elif args.kind == "random":
        series = uniform_series(args.n, seed=seed)
        params = {"kind": "random", "n": args.n, "seed": seed, "out": str(args.out)}
    else:
        source = load_csv(args.input, _parse_column(args.column), delimiter=args.delimiter)
        series = shuffle_surrogate(source, seed=seed)
        params = {
            "kind": "shuffle",
            "input": str(args.input),
            "column": args.column,
            "delimiter": args.delimiter,
            "seed": seed,
            "out": str(args.out),
        }

    _write_csv(args.out, ["index", "value"], ((i, float(v)) for i, v in enumerate(series.values)))
    run_config = _run_config("synth", params)
    _write_sidecar(args.out, run_config, meta=dict(series.meta))
    descr = ", ".join(f"{k}={v}" for k, v in series.meta.items())
    print(f"synth {args.kind}: wrote {len(series)} samples to {args.out} ({descr})")
    return 0


def _cmd_analyze(args) -> int:
    seed = _resolve_seed(args.seed)
    series = _load_input(args)
    _note_dimension_range(args.d)
    report = full_report(
        series,
        args.d,
        baseline_kind=args.baseline,
        n_surrogates=args.surrogates,
        master_seed=seed,
        threshold=args.threshold,
    )
    _emit_warnings(report.warnings)

    params = {
        "input": str(args.input),
        "column": args.column,
        "date_column": args.date_column,
        "order_policy": args.order_policy,
        "delimiter": args.delimiter,
        "d_list": args.d,
        "baseline_kind": args.baseline,
        "surrogates": args.surrogates,
        "threshold": args.threshold,
        "seed": seed,
        "format": args.format,
        "out": str(args.out),
    }
    run_config = _run_config("analyze", params)
    doc = {"kind": "report", "schema_version": SCHEMA_VERSION, "run_config": run_config}
    doc.update(report.to_dict())
    curve_rows = [
        (res.d, n, f)
        for res in report.results
        if res.curve is not None
        for n, f in res.curve.points
    ]
    if args.format == "json":
        _write_json(args.out, doc)
        _write_csv(_sibling(args.out, ".curves.csv"), ["d", "N", "forbidden"], curve_rows)
    else:
        _write_csv(args.out, ["d", "N", "forbidden"], curve_rows)
        _write_json(_sibling(args.out, ".report.json"), doc)
    _write_sidecar(args.out, run_config, meta={"warnings": report.warnings})
    return 0


def _cmd_pdf(args) -> int:
    series = _load_input(args)
    _note_dimension_range([args.d])
    census = build_census(series, args.d)
    pdf = occurrence_pdf(census)
    warnings = [
        w
        for w in (
            undersampling_warning(args.d, len(series)),
            tie_warning(args.d, census.ties_seen, census.windows_total),
        )
        if w
    ]
    _emit_warnings(warnings)

    params = {
        "input": str(args.input),
        "column": args.column,
        "delimiter": args.delimiter,
        "d": args.d,
        "format": args.format,
        "out": str(args.out),
    }
    run_config = _run_config("pdf", params)
    rows = [
        {"k": int(k), "probability": float(p)}
        for k, p in zip(pdf.support, pdf.probability)
    ]
    meta = {
        "d": args.d,
        "windows_total": census.windows_total,
        "zero_count": pdf.zero_count,
        "ties_seen": census.ties_seen,
        "warnings": warnings,
    }
    if args.format == "json":
        doc = {
            "kind": "pdf",
            "schema_version": SCHEMA_VERSION,
            "run_config": run_config,
            "d": args.d,
            "windows_total": census.windows_total,
            "zero_count": pdf.zero_count,
            "ties_seen": census.ties_seen,
            "warnings": warnings,
            "rows": rows,
        }
        _write_json(args.out, doc)
    else:
        _write_csv(args.out, ["k", "probability"], ((r["k"], r["probability"]) for r in rows))
    _write_sidecar(args.out, run_config, meta=meta)
    return 0


def _cmd_rolling(args) -> int:
    series = _load_input(args)
    _note_dimension_range([args.d])
    trace = rolling_forbidden(series, args.d, args.window, args.step)
    census = build_census(series, args.d)
    warnings = [
        w
        for w in (
            undersampling_warning(args.d, len(series)),
            tie_warning(args.d, census.ties_seen, census.windows_total),
        )
        if w
    ]
    if args.window <= undersampling_bound(args.d):
        warnings.append(
            {
                "code": "undersampled_window",
                "d": args.d,
                "window_len": args.window,
                "bound": undersampling_bound(args.d),
                "message": f"window length {args.window} <= (d+1)! = "
                f"{undersampling_bound(args.d)} for d={args.d}; per-window "
                "forbidden counts include finite-sample absences",
            }
        )
    _emit_warnings(warnings)

    params = {
        "input": str(args.input),
        "column": args.column,
        "date_column": args.date_column,
        "order_policy": args.order_policy,
        "delimiter": args.delimiter,
        "d": args.d,
        "window_len": args.window,
        "step": args.step,
        "format": args.format,
        "out": str(args.out),
    }
    run_config = _run_config("rolling", params)
    stamps = series.timestamps
    if args.format == "json":
        rows = []
        for end, forbidden in trace.points:
            row = {"end_index": end, "forbidden": forbidden}
            if stamps is not None:
                row["end_date"] = stamps[end].isoformat()
            rows.append(row)
        doc = {
            "kind": "rolling",
            "schema_version": SCHEMA_VERSION,
            "run_config": run_config,
            "d": args.d,
            "window_len": args.window,
            "step": args.step,
            "warnings": warnings,
            "rows": rows,
        }
        _write_json(args.out, doc)
    else:
        if stamps is not None:
            header = ["end_index", "end_date", "forbidden"]
            rows = [(e, stamps[e].isoformat(), f) for e, f in trace.points]
        else:
            header = ["end_index", "forbidden"]
            rows = trace.points
        _write_csv(args.out, header, rows)
    _write_sidecar(args.out, run_config, meta={"warnings": warnings})
    return 0


def _cmd_baseline(args) -> int:
    seed = _resolve_seed(args.seed)
    _note_dimension_range([args.d])
    source = None
    if args.kind == "shuffle":
        if args.input is None:
            raise InvalidInputError("baseline --kind shuffle requires --input")
        source = load_csv(args.input, _parse_column(args.column), delimiter=args.delimiter)
        n = args.n if args.n is not None else len(source)
    else:
        if args.n is None:
            raise InvalidInputError("baseline --kind uniform requires --n")
        n = args.n
    ensemble = baseline(
        args.d,
        n,
        kind=args.kind,
        n_surrogates=args.surrogates,
        master_seed=seed,
        source=source,
    )
    warnings = [w for w in (undersampling_warning(args.d, n),) if w]
    _emit_warnings(warnings)

    params = {
        "d": args.d,
        "n": n,
        "kind": args.kind,
        "surrogates": args.surrogates,
        "seed": seed,
        "input": str(args.input) if args.input is not None else None,
        "column": args.column if args.input is not None else None,
        "delimiter": args.delimiter if args.input is not None else None,
        "format": args.format,
        "out": str(args.out),
    }
    run_config = _run_config("baseline", params)
    if args.format == "json":
        doc = {
            "kind": "baseline",
            "schema_version": SCHEMA_VERSION,
            "run_config": run_config,
            "warnings": warnings,
            "ensemble": ensemble.to_dict(),
        }
        _write_json(args.out, doc)
    else:
        _write_csv(
            args.out,
            ["member", "forbidden"],
            ((i, int(f)) for i, f in enumerate(ensemble.members)),
        )
    _write_sidecar(
        args.out,
        run_config,
        meta={"ensemble": ensemble.to_dict(), "warnings": warnings},
    )
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_input_flags(parser, with_dates: bool = False) -> None:
    parser.add_argument("--input", required=True, help="delimited input file")
    parser.add_argument(
        "--column", default="value", help="value column, by name or 0-based index"
    )
    parser.add_argument("--delimiter", default=",", help="field separator")
    if with_dates:
        parser.add_argument(
            "--date-column", dest="date_column", default=None,
            help="ISO-8601 date column, by name or 0-based index",
        )
        parser.add_argument(
            "--order-policy", dest="order_policy",
            choices=["require-ascending", "sort-by-date"],
            default="require-ascending",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordpat",
        description="Forbidden ordinal-pattern analysis for scalar time series",
    )
    parser.add_argument("--version", action="version", version=f"ordpat {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    synth = sub.add_parser("synth", help="generate a seeded synthetic series")
    kinds = synth.add_subparsers(dest="kind", required=True)

    logistic = kinds.add_parser("logistic", help="chaotic orbit of x -> 4x(1-x)")
    logistic.add_argument("--n", type=int, required=True)
    logistic.add_argument("--x0", type=float, default=None,
                          help="initial condition in (0,1); derived from the seed when omitted")
    logistic.add_argument("--transient", type=int, default=1000)
    logistic.add_argument("--seed", type=int, default=None)
    logistic.add_argument("--out", required=True)
    logistic.set_defaults(func=_cmd_synth)

    random_p = kinds.add_parser("random", help="iid uniform noise on (0,1)")
    random_p.add_argument("--n", type=int, required=True)
    random_p.add_argument("--seed", type=int, default=None)
    random_p.add_argument("--out", required=True)
    random_p.set_defaults(func=_cmd_synth)

    shuffle = kinds.add_parser("shuffle", help="random permutation of an input column")
    _add_input_flags(shuffle)
    shuffle.add_argument("--seed", type=int, default=None)
    shuffle.add_argument("--out", required=True)
    shuffle.set_defaults(func=_cmd_synth)

    analyze = sub.add_parser(
        "analyze", help="censuses, growth curves, PDFs and verdicts per dimension"
    )
    _add_input_flags(analyze, with_dates=True)
    analyze.add_argument("--d", type=_d_list, default=[4, 5, 6],
                         help="comma-separated dimensions (default 4,5,6)")
    analyze.add_argument("--baseline", choices=["uniform", "shuffle"], default="uniform")
    analyze.add_argument("--surrogates", type=int, default=20)
    analyze.add_argument("--threshold", type=float, default=10.0)
    analyze.add_argument("--seed", type=int, default=None)
    analyze.add_argument("--format", choices=["csv", "json"], default="json")
    analyze.add_argument("--out", required=True)
    analyze.set_defaults(func=_cmd_analyze)

    pdf = sub.add_parser("pdf", help="occurrence-count distribution of the patterns")
    _add_input_flags(pdf)
    pdf.add_argument("--d", type=int, required=True)
    pdf.add_argument("--format", choices=["csv", "json"], default="csv")
    pdf.add_argument("--out", required=True)
    pdf.set_defaults(func=_cmd_pdf)

    rolling = sub.add_parser("rolling", help="sliding-window forbidden-count trace")
    _add_input_flags(rolling, with_dates=True)
    rolling.add_argument("--d", type=int, required=True)
    rolling.add_argument("--window", type=int, required=True)
    rolling.add_argument("--step", type=int, default=1)
    rolling.add_argument("--format", choices=["csv", "json"], default="csv")
    rolling.add_argument("--out", required=True)
    rolling.set_defaults(func=_cmd_rolling)

    baseline_p = sub.add_parser("baseline", help="surrogate forbidden-count ensemble")
    baseline_p.add_argument("--d", type=int, required=True)
    baseline_p.add_argument("--n", type=int, default=None,
                            help="surrogate length (defaults to the input length for shuffle)")
    baseline_p.add_argument("--kind", choices=["uniform", "shuffle"], default="uniform")
    baseline_p.add_argument("--surrogates", type=int, default=20)
    baseline_p.add_argument("--seed", type=int, default=None)
    baseline_p.add_argument("--input", default=None, help="source series for --kind shuffle")
    baseline_p.add_argument("--column", default="value")
    baseline_p.add_argument("--delimiter", default=",")
    baseline_p.add_argument("--format", choices=["csv", "json"], default="csv")
    baseline_p.add_argument("--out", required=True)
    baseline_p.set_defaults(func=_cmd_baseline)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InsufficientDataError as exc:
        print(f"ordpat: error: {exc}", file=sys.stderr)
        return 3
    except (OrdpatError, OSError) as exc:
        print(f"ordpat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
