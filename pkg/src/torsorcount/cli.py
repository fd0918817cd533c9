"""Command-line front end: ``count`` writes morphism-count tables, ``verify`` runs the check suites.

Exit codes: 0 ok, 1 cross-method mismatch or failed check, 2 usage error.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from typing import Sequence

from . import checks
from .heights import DEFAULT_BUDGET, SUPPORTED_Q, count_geometric, count_moebius, count_torsor

METHODS = ("torsor", "geometric", "moebius")
COLUMNS = ("n", "method", "count", "predicted", "ratio", "seconds")


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _field_size(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value not in SUPPORTED_Q:
        raise argparse.ArgumentTypeError(f"q must be one of {', '.join(map(str, SUPPORTED_Q))}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torsorcount",
        description="Count morphisms P^1 -> S over F_q by anticanonical degree and verify the identities behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="table of N(n) for n <= nmax")
    count.add_argument("--q", type=_field_size, required=True, help="field size (2, 3, 4 or 5)")
    count.add_argument("--nmax", type=_nonnegative, required=True, help="largest anticanonical degree")
    count.add_argument("--method", choices=METHODS + ("all",), default="torsor")
    count.add_argument("--format", choices=("csv", "json"), default="csv")
    count.add_argument("--out", help="write the table here instead of stdout")
    count.add_argument("--threads", type=_positive, default=1, help="worker processes")
    count.add_argument("--budget", type=_nonnegative, help="override the default nmax budget for q")
    count.add_argument("--timing", action="store_true",
                       help="fill the seconds column (otherwise left empty so output is reproducible)")

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", choices=checks.SUITES + ("all",), default="all")
    verify.add_argument("--q", type=_int_list, help="field sizes for the kernel and decomposition suites")
    verify.add_argument("--qv", type=_int_list, help="residue field sizes for the local suite")
    verify.add_argument("--trunc", type=_nonnegative, default=6, help="truncation order for the series suite")
    verify.add_argument("--verbose", action="store_true", help="print passing checks too")
    return parser


def _fmt_float(x) -> str:
    return "" if x is None else format(x, ".15g")


def _rows(records, timing: bool) -> list[dict]:
    rows = []
    for r in records:
        rows.append({
            "n": r.n,
            "method": r.method,
            "count": r.count,
            "predicted": r.predicted,
            "ratio": r.ratio,
            "seconds": r.elapsed if timing else None,
        })
    return rows


def render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    buf.write(",".join(COLUMNS) + "\n")
    for row in rows:
        cells = [str(row["n"]), row["method"], str(row["count"]),
                 _fmt_float(row["predicted"]), _fmt_float(row["ratio"]), _fmt_float(row["seconds"])]
        buf.write(",".join(cells) + "\n")
    return buf.getvalue()


def render_json(rows: list[dict]) -> str:
    out = []
    for row in rows:
        out.append({
            "n": row["n"],
            "method": row["method"],
            "count": row["count"],
            # floats rendered to 15 significant digits for stable output
            "predicted": None if row["predicted"] is None else float(_fmt_float(row["predicted"])),
            "ratio": None if row["ratio"] is None else float(_fmt_float(row["ratio"])),
            "seconds": row["seconds"],
        })
    return json.dumps(out, indent=2) + "\n"


_COUNTERS = {"torsor": count_torsor, "geometric": count_geometric, "moebius": count_moebius}


def cmd_count(args) -> int:
    methods = METHODS if args.method == "all" else (args.method,)
    budget = args.budget if args.budget is not None else DEFAULT_BUDGET[args.q]
    if args.nmax > budget:
        print(f"torsorcount: --nmax {args.nmax} exceeds the budget {budget} for q={args.q}; "
              f"pass --budget to override", file=sys.stderr)
        return 2
    tables = {}
    for m in methods:
        tables[m] = _COUNTERS[m](args.q, args.nmax, threads=args.threads, budget=budget)
    rows = [row for m in methods for row in _rows(tables[m], args.timing)]
    text = render_csv(rows) if args.format == "csv" else render_json(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if len(methods) > 1:
        reference = [r.count for r in tables[methods[0]]]
        mismatched = [m for m in methods[1:] if [r.count for r in tables[m]] != reference]
        if mismatched:
            for m in mismatched:
                diff = [(a.n, b.count, a.count) for a, b in zip(tables[m], tables[methods[0]]) if a.count != b.count]
                print(f"torsorcount: {m} disagrees with {methods[0]} at (n, expected, got) {diff}", file=sys.stderr)
            return 1
    return 0


def cmd_verify(args) -> int:
    suites = checks.SUITES if args.suite == "all" else (args.suite,)
    failures = 0
    for name in suites:
        if name == "local":
            results = checks.suite_local(args.qv or checks.DEFAULT_QV)
        elif name == "series":
            results = checks.suite_series(trunc=args.trunc)
        elif name == "kernel":
            results = checks.suite_kernel(args.q or (2, 3))
        elif name == "decomposition":
            results = checks.suite_decomposition(args.q or (2, 3))
        else:
            results = checks.suite_moebius()
        bad = [c for c in results if not c.passed]
        failures += len(bad)
        for c in results:
            if args.verbose or not c.passed:
                print(c.line())
        status = "pass" if not bad else "FAIL"
        print(f"{status} suite {name}: {len(results) - len(bad)}/{len(results)} checks")
    return 1 if failures else 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; normalize to the documented code
        return 0 if exc.code == 0 else 2
    try:
        if args.command == "count":
            return cmd_count(args)
        return cmd_verify(args)
    except ValueError as exc:
        print(f"torsorcount: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
