"""Command-line front end.

    zerodim zdim-t0 13 --algorithm parallel --depth 9 --format json
    zerodim zdim 9
    zerodim stirling 5
    zerodim partitions 4 --emit dvectors
    zerodim ord --star
    zerodim verify
    zerodim bench --n 13 --depths 0,3,6,9 --repeats 3

Counts are always printed as full decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from typing import Callable, Sequence

from . import golden, oracle
from .counting import ALGORITHMS, BACKENDS, zdim, zdim_series, zdim_t0
from .errors import ConfigurationError, DomainError
from .order_tables import default_ord_star, load_ord_table
from .parallel import SplitConfig, bench_depth_sweep, parse_depths
from .partitions import (
    block_sizes,
    generate_iterative,
    generate_recursive,
    generate_recursive_codewords,
)
from .stirling import stirling_row

RECORD_FIELDS = ("command", "n", "value", "algorithm", "depth", "workers", "elapsed_seconds")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _fmt_vector(v: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _emit_record(record: dict, fmt: str, out) -> None:
    if fmt == "plain":
        print(record["value"], file=out)
    elif fmt == "json":
        print(json.dumps(record), file=out)
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=RECORD_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerow(record)
        out.write(buf.getvalue())


def _cmd_zdim_t0(args, out) -> int:
    res = zdim_t0(
        args.n, args.algorithm, depth=args.depth, workers=args.threads, backend=args.backend
    )
    record = {
        "command": "zdim-t0",
        "n": res.n,
        "value": str(res.value),
        "algorithm": res.algorithm,
        "depth": res.depth,
        "workers": res.workers,
        "elapsed_seconds": round(res.elapsed_seconds, 6),
    }
    _emit_record(record, args.format, out)
    return 0


def _cmd_zdim(args, out) -> int:
    start = time.perf_counter()
    values = zdim_series(
        args.n, args.algorithm, depth=args.depth, workers=args.threads, backend=args.backend
    )
    value = zdim(args.n, values, stirling_row(args.n))
    cfg = (
        SplitConfig.for_n(args.n, args.depth, args.threads)
        if args.algorithm == "parallel"
        else SplitConfig(0, 1)
    )
    record = {
        "command": "zdim",
        "n": args.n,
        "value": str(value),
        "algorithm": args.algorithm,
        "depth": cfg.depth,
        "workers": cfg.workers,
        "elapsed_seconds": round(time.perf_counter() - start, 6),
    }
    _emit_record(record, args.format, out)
    return 0


def _cmd_stirling(args, out) -> int:
    row = stirling_row(args.n)
    if args.format == "plain":
        print(" ".join(str(v) for v in row), file=out)
    elif args.format == "json":
        print(json.dumps({"n": row.n, "row": [str(v) for v in row], "bell": str(row.bell())}),
              file=out)
    else:
        print("i,value", file=out)
        for i, v in enumerate(row, 1):
            print(f"{i},{v}", file=out)
    return 0


def _cmd_partitions(args, out) -> int:
    n = args.n
    write = out.write
    if args.emit == "codewords":
        gen = generate_iterative if args.algorithm == "iterative" else generate_recursive_codewords
        gen(n, lambda c: write(_fmt_vector(c) + "\n"))
    elif args.algorithm == "iterative":
        generate_iterative(n, lambda c: write(_fmt_vector(block_sizes(c)) + "\n"))
    else:
        generate_recursive(n, lambda s: write(_fmt_vector(s.d) + "\n"))
    return 0


def _cmd_ord(args, out) -> int:
    table = default_ord_star() if args.star else load_ord_table()
    label = "ORD*" if args.star else "ORD"
    rows = [(k, table[k]) for k in range(1, len(table) + 1)]
    if args.format == "json":
        print(json.dumps({"table": label, "values": {str(k): str(v) for k, v in rows}}), file=out)
    elif args.format == "csv":
        print("n,value", file=out)
        for k, v in rows:
            print(f"{k},{v}", file=out)
    else:
        for k, v in rows:
            print(f"{k} {v}", file=out)
    return 0


def verification_rows(max_n: int | None = None) -> list[tuple[str, int, int, int, int]]:
    """(quantity, n, oracle, engine, published) for every small case checked by ``verify``."""
    order_limit = oracle.MAX_ORDER_N if max_n is None else min(max_n, oracle.MAX_ORDER_N)
    pre_limit = oracle.MAX_PREORDER_N if max_n is None else min(max_n, oracle.MAX_PREORDER_N)
    ords = load_ord_table()
    star = default_ord_star()
    rows = []
    for n in range(1, order_limit + 1):
        rows.append(("ORD", n, oracle.count_posets(n), ords[n], ords[n]))
    for n in range(1, order_limit + 1):
        published = n * ords[n - 1] if n > 1 else 1
        rows.append(("ORD*", n, oracle.count_posets_with_greatest(n), star[n], published))
    for n in range(1, order_limit + 1):
        engine = zdim_t0(n, "recursive").value
        rows.append(("ZDIM_T0", n, oracle.count_zerodim_t0(n), engine, golden.ZDIM_T0[n]))
    t0 = zdim_series(pre_limit) if pre_limit else []
    for n in range(1, pre_limit + 1):
        engine = zdim(n, t0[:n], stirling_row(n))
        rows.append(("ZDIM", n, oracle.count_zerodim(n), engine, golden.ZDIM[n]))
    return rows


def _cmd_verify(args, out) -> int:
    rows = verification_rows(args.max_n)
    print(f"{'quantity':<8} {'n':>2} {'oracle':>8} {'engine':>8} {'published':>9}  status", file=out)
    failures = 0
    for name, n, orc, eng, pub in rows:
        ok = orc == eng == pub
        failures += not ok
        print(f"{name:<8} {n:>2} {orc:>8} {eng:>8} {pub:>9}  {'PASS' if ok else 'FAIL'}", file=out)
    print(f"{len(rows) - failures}/{len(rows)} checks passed", file=out)
    return 0 if failures == 0 else 1


def _cmd_bench(args, out) -> int:
    workers = args.threads
    cfg = SplitConfig(0, workers) if workers else None
    report = bench_depth_sweep(args.n, parse_depths(args.depths), cfg, repeats=args.repeats)
    out.write(report.to_csv())
    speedup = report.speedup()
    if speedup is not None:
        best = report.best_seconds()
        fastest = min((s, d) for d, s in best.items() if d != 0)[1]
        verdict = "meets" if speedup >= 2.0 else "below"
        print(
            f"# n={args.n} workers={report.workers}: depth {fastest} is {speedup:.2f}x "
            f"faster than depth 0 ({verdict} the 2x target)",
            file=sys.stderr,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerodim",
        description="Count zero-dimensional topologies on {1..n}.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    engine = argparse.ArgumentParser(add_help=False)
    engine.add_argument("--algorithm", choices=ALGORITHMS, default="recursive")
    engine.add_argument("--depth", type=_non_negative, default=None,
                        help="split depth for --algorithm parallel (default min(9, n-1))")
    engine.add_argument("--threads", type=_positive, default=None,
                        help="worker threads (default $ZERODIM_THREADS or all CPUs)")
    engine.add_argument("--backend", choices=BACKENDS, default="native",
                        help="compiled kernels or pure-Python big integers")
    formatted = argparse.ArgumentParser(add_help=False)
    formatted.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    p = sub.add_parser("zdim-t0", parents=[engine, formatted], help="zero-dimensional T0 spaces")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=_cmd_zdim_t0)

    p = sub.add_parser("zdim", parents=[engine, formatted], help="all zero-dimensional spaces")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=_cmd_zdim)

    p = sub.add_parser("stirling", parents=[formatted], help="Stirling numbers S(n, 1..n)")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=_cmd_stirling)

    p = sub.add_parser("partitions", help="list codewords or block-size vectors")
    p.add_argument("n", type=_positive)
    p.add_argument("--emit", choices=("codewords", "dvectors"), default="codewords")
    p.add_argument("--algorithm", choices=("iterative", "recursive"), default="iterative")
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("ord", parents=[formatted], help="embedded partial-order counts")
    p.add_argument("--star", action="store_true", help="rooted counts ORD*(1..19)")
    p.set_defaults(func=_cmd_ord)

    p = sub.add_parser("verify", help="compare brute force, engine and published tables")
    p.add_argument("--max-n", type=_positive, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="time the parallel engine across split depths")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--depths", default="0,3,6,9")
    p.add_argument("--repeats", type=_positive, default=1)
    p.add_argument("--threads", type=_positive, default=None)
    p.set_defaults(func=_cmd_bench)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    handler: Callable = args.func
    try:
        return handler(args, out)
    except (DomainError, ConfigurationError) as exc:
        print(f"zerodim: error: {exc}", file=sys.stderr)
        return 1


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="zerodim: %(levelname)s: %(message)s")
    try:
        return run(argv)
    except BrokenPipeError:
        return 0
