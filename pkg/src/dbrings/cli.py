"""Command-line interface.

Exit codes: 0 success, 1 semantic failure (verification failed, window not
in map), 2 bad arguments, 3 resource budget exceeded.  The environment
variable ``DBMAP_BUDGET`` overrides the edge and window budgets.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import stats
from .composer import CompositionSpec, build_almost_perfect, plan_composition
from .decoder import build_index, decode
from .errors import ArgumentError, DBError, NotInMap, ResourceBudgetError
from .maps import CyclicMap, read_map
from .ring_builder import build_ring, trim_ring
from .ring_graph import DEFAULT_EDGE_BUDGET
from .verifier import DEFAULT_WINDOW_BUDGET, verify
from .words import SYMBOLS, Alphabet, debruijn_sequence

EXIT_OK, EXIT_FAIL, EXIT_ARGS, EXIT_BUDGET = 0, 1, 2, 3


def _budget(default: int, override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get("DBMAP_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ArgumentError(f"DBMAP_BUDGET must be an integer, got {env!r}") from None
    return default


def _emit(text: str, output: str | None):
    if output and output != "-":
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_seq(args) -> int:
    seq = debruijn_sequence(args.k, args.n)
    alphabet = Alphabet(args.k)
    _emit("".join(alphabet.render(s) for s in seq) + "\n", args.output)
    return EXIT_OK


def _maybe_verify(cmap: CyclicMap, args) -> int:
    if not args.verify:
        return EXIT_OK
    report = verify(cmap, budget=_budget(DEFAULT_WINDOW_BUDGET, args.budget))
    sys.stderr.write(report.to_text())
    return EXIT_OK if report.is_sub_perfect else EXIT_FAIL


def cmd_ring(args) -> int:
    ring = build_ring(args.m, args.n, args.k, budget=_budget(DEFAULT_EDGE_BUDGET, args.budget))
    ring = trim_ring(ring, args.trim)
    _emit(ring.to_dbmap(), args.output)
    return _maybe_verify(ring, args)


def cmd_map(args) -> int:
    spec = plan_composition(args.m, args.n, args.k1, args.k2, trim=not args.no_trim)
    product = build_almost_perfect(spec, budget=_budget(DEFAULT_EDGE_BUDGET, args.budget))
    _emit(product.map.to_dbmap(), args.output)
    if args.sidecar:
        Path(args.sidecar).write_text(spec.to_json())
    return _maybe_verify(product.map, args)


def cmd_verify(args) -> int:
    cmap = read_map(args.file)
    report = verify(
        cmap,
        args.m if args.m is not None else cmap.m,
        args.n if args.n is not None else cmap.n,
        budget=_budget(DEFAULT_WINDOW_BUDGET, args.budget),
        workers=args.workers,
    )
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return EXIT_OK if report.is_sub_perfect else EXIT_FAIL


def parse_window(text: str, m: int, n: int, k: int):
    """Window from ``m`` lines of ``n`` symbols, or from a small DBMAP document."""
    if text.startswith("DBMAP"):
        cmap = CyclicMap.from_dbmap(text)
        if cmap.shape != (m, n):
            raise ArgumentError(f"window map must be {m}x{n}, got {cmap.M}x{cmap.N}")
        return tuple(tuple(row) for row in cmap.cells.tolist())
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != m or any(len(line) != n for line in lines):
        raise ArgumentError(f"window must be {m} lines of {n} symbols")
    alphabet = Alphabet(k)
    return tuple(tuple(alphabet.parse(ch) for ch in line) for line in lines)


def cmd_decode(args) -> int:
    spec = CompositionSpec.from_json(Path(args.sidecar).read_text())
    product = build_almost_perfect(spec, budget=_budget(DEFAULT_EDGE_BUDGET, args.budget))
    if args.map:
        given = read_map(args.map)
        if given != product.map:
            sys.stderr.write("error: map file does not match the map described by the sidecar\n")
            return EXIT_FAIL
    idx = build_index(product)
    if args.all:
        failures = 0
        out = []
        for r in range(spec.M):
            for c in range(spec.N):
                pos = decode(idx, product.map.window(r, c))
                failures += pos != (r, c)
                out.append(f"{pos}\n")
        sys.stdout.write("".join(out))
        return EXIT_FAIL if failures else EXIT_OK
    text = Path(args.window).read_text() if args.window else sys.stdin.read()
    window = parse_window(text, spec.m, spec.n, spec.k)
    try:
        pos = decode(idx, window)
    except NotInMap as exc:
        sys.stderr.write(f"NotInMap: {exc}\n")
        return EXIT_FAIL
    sys.stdout.write(f"{pos}\n")
    return EXIT_OK


def cmd_stats(args) -> int:
    mode = "float64" if args.float64 else "exact"
    blocks = []
    diffs = []
    if args.table1:
        rows = stats.table1(
            stats.parse_range(args.m), stats.parse_range(args.n), stats.parse_range(args.k), arithmetic=mode
        )
        blocks.append(stats.table1_csv(rows) if args.csv else stats.table1_text(rows))
        if args.check_printed:
            diffs += [("table1", d) for d in stats.diff_table1(rows)]
    if args.table2:
        rows = stats.table2(stats.parse_range(args.k), stats.parse_range(args.n), arithmetic=mode)
        blocks.append(stats.table2_csv(rows) if args.csv else stats.table2_text(rows))
        if args.check_printed:
            diffs += [("table2", d) for d in stats.diff_table2(rows)]
    if not blocks:
        raise ArgumentError("choose --table1 and/or --table2")
    sys.stdout.write("\n".join(blocks))
    if args.check_printed:
        for table, d in diffs:
            key = ",".join(str(x) for x in d.key)
            sys.stderr.write(f"DIFF {table} ({key}) {d.column}: computed {d.computed} printed {d.printed}\n")
        sys.stderr.write(f"{len(diffs)} cell(s) differ from the published tables\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dbrings", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_opt(p):
        p.add_argument("--budget", type=int, default=None, help="edge/window budget (default: $DBMAP_BUDGET or 1e8)")

    p = sub.add_parser("seq", help="one-dimensional de Bruijn sequence")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("ring", help="(m,n)_k de Bruijn ring as DBMAP")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trim", type=int, default=0, metavar="J", help="remove stair runs i=1..J")
    p.add_argument("--verify", action="store_true")
    p.add_argument("-o", "--output")
    budget_opt(p)
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("map", help="almost perfect map over alphabet k1*k2")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--no-trim", action="store_true", help="stack untrimmed rings")
    p.add_argument("--sidecar", help="write composition parameters as JSON")
    p.add_argument("--verify", action="store_true")
    p.add_argument("-o", "--output")
    budget_opt(p)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="exhaustive window check of a DBMAP file")
    p.add_argument("file")
    p.add_argument("--m", type=int, help="window rows (default: from header)")
    p.add_argument("--n", type=int, help="window columns (default: from header)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    budget_opt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decode", help="absolute position of a window")
    p.add_argument("--sidecar", required=True)
    p.add_argument("--map", help="DBMAP file; checked against the sidecar")
    p.add_argument("--window", help="window file (default: stdin)")
    p.add_argument("--all", action="store_true", help="decode every window of the map, print 'r c' per position")
    budget_opt(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("stats", help="counting tables")
    p.add_argument("--table1", action="store_true", help="row-aperiodic ratios")
    p.add_argument("--table2", action="store_true", help="square map coverage")
    p.add_argument("--m", default="2-6")
    p.add_argument("--n", default="2-6")
    p.add_argument("--k", default="2-5")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--float64", action="store_true", help="evaluate in double precision like the published tables")
    p.add_argument("--check-printed", action="store_true", help="report cells differing from the published tables")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ArgumentError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ARGS
    except ResourceBudgetError as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except DBError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
