"""Command-line front end: instance I/O, algorithm selection, table dumps,
and the cross-checking benchmark harness.

Output is line-oriented key=value pairs so it composes in pipelines; the
only human-formatted block is the table dump behind --dump-tables. Exit
codes: 0 success, 1 usage or parse problems, 2 infeasible threshold,
3 non-integer input handed to the integer-only search, 4 benchmark value
mismatch between algorithms.
"""

from __future__ import annotations

import argparse
import csv
import os
import re
import sys
import time
from pathlib import Path

from .core import (
    EmptyString,
    Infeasible,
    MergeCutError,
    NonIntegerInput,
    NonPositiveValue,
    NumString,
    QOutOfRange,
    apply_merges,
    format_number,
    partition_to_merges,
    to_points,
)
from .fpt import maxmin_merge_fpt
from .greedy import fewest_merges, maxmin_merge_by_search, optimal_b_partition
from .kcut_dp import cut2_linear, cut3_linear, cut_string_dp, fill_tables
from .oracle import DEFAULT_BUDGET, OracleBudget, gen_instance, oracle_maxmin_cut

ORACLE_CAP_ENV = "MERGECUT_ORACLE_MAX_N"


class InstanceParseError(Exception):
    """Input file does not parse to a usable string of positive numbers."""


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def parse_instance(text: str) -> NumString:
    """Auto-detects a structured document (with a "values" list) or a plain
    whitespace/comma-separated number list; failures carry line/column."""
    stripped = text.lstrip()
    if stripped[:1] in ("{", "["):
        import json

        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise InstanceParseError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
        raw = doc
        if isinstance(doc, dict):
            if "values" not in doc:
                raise InstanceParseError('structured instance needs a "values" field')
            raw = doc["values"]
        if not isinstance(raw, list):
            raise InstanceParseError('"values" must be a list of numbers')
        values = []
        for i, v in enumerate(raw):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise InstanceParseError(f"values[{i}] is not a number: {v!r}")
            values.append(float(v))
        try:
            return NumString(tuple(values))
        except (EmptyString, NonPositiveValue) as e:
            raise InstanceParseError(str(e)) from None
    values = []
    spans = []
    for m in re.finditer(r"[^\s,]+", text):
        tok = m.group()
        try:
            values.append(float(tok))
        except ValueError:
            line, col = _line_col(text, m.start())
            raise InstanceParseError(f"line {line}, column {col}: not a number: {tok!r}") from None
        spans.append(m.start())
    try:
        return NumString(tuple(values))
    except NonPositiveValue as e:
        line, col = _line_col(text, spans[e.index])
        raise InstanceParseError(f"line {line}, column {col}: {e}") from None
    except EmptyString as e:
        raise InstanceParseError(str(e)) from None


def _load_instance(path: str) -> NumString:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InstanceParseError(f"cannot read {path}: {e.strerror or e}") from None
    return parse_instance(text)


def _seq(values) -> str:
    return " ".join(format_number(v) for v in values)


def _oracle_budget() -> OracleBudget:
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        cap = int(raw)
    except ValueError:
        raise InstanceParseError(f"{ORACLE_CAP_ENV} must be an integer, got {raw!r}") from None
    return OracleBudget(max_n=cap)


def cmd_fewest_merge(args) -> int:
    s = _load_instance(args.input)
    if args.b <= 0:
        print("error: --b must be positive", file=sys.stderr)
        return 1
    t0 = time.perf_counter_ns()
    res = optimal_b_partition(s, args.b)
    plan = partition_to_merges(s, res.partition)
    nanos = time.perf_counter_ns() - t0
    out = [
        "algorithm=greedy",
        f"n={s.n}",
        f"b={format_number(args.b)}",
        f"pieces={res.piece_count}",
        f"merges={plan.merge_count}",
    ]
    if args.emit == "merged":
        out.append(f"merged={_seq(apply_merges(s, plan).values)}")
    elif args.emit == "plan":
        out.append(f"plan={_seq(plan.steps)}")
    else:
        out.append(f"cuts={_seq(res.partition.cuts)}")
    out.append(f"nanos={nanos}")
    print("\n".join(out))
    return 0


def cmd_maxmin_merge(args) -> int:
    s = _load_instance(args.input)
    k = args.k
    n = s.n
    if args.algo == "dp":
        t0 = time.perf_counter_ns()
        value, partition = cut_string_dp(s, n - k)
        plan = partition_to_merges(s, partition)
        nanos = time.perf_counter_ns() - t0
    elif args.algo == "fpt":
        t0 = time.perf_counter_ns()
        value, plan = maxmin_merge_fpt(s, k)
        nanos = time.perf_counter_ns() - t0
    elif args.algo == "search":
        t0 = time.perf_counter_ns()
        value, plan = maxmin_merge_by_search(s, k)
        nanos = time.perf_counter_ns() - t0
    else:
        budget = _oracle_budget()
        if n > budget.max_n:
            print(f"error: oracle is capped at n={budget.max_n}, got n={n}", file=sys.stderr)
            return 1
        t0 = time.perf_counter_ns()
        value = oracle_maxmin_cut(s, n - k, budget)
        plan = None
        nanos = time.perf_counter_ns() - t0
    out = [
        f"algorithm={args.algo}",
        f"n={n}",
        f"k={k}",
        f"value={format_number(value)}",
    ]
    if plan is not None:
        out.append(f"plan={_seq(plan.steps)}")
    out.append(f"nanos={nanos}")
    print("\n".join(out))
    return 0


def cmd_cut(args) -> int:
    s = _load_instance(args.input)
    q = args.pieces
    n = s.n
    if not 1 <= q <= n:
        raise QOutOfRange(f"q={q} outside [1, {n}]")
    tables = None
    if args.dump_tables or q not in (2, 3):
        algo = "dp"
        t0 = time.perf_counter_ns()
        tables = fill_tables(to_points(s), q + 1)
        value = tables.best(q + 1)
        cuts = tuple(i for i in tables.subset(q + 1) if 0 < i < n)
        nanos = time.perf_counter_ns() - t0
    elif q == 2:
        algo = "cut2"
        t0 = time.perf_counter_ns()
        value, partition = cut2_linear(s)
        cuts = partition.cuts
        nanos = time.perf_counter_ns() - t0
    else:
        algo = "cut3"
        t0 = time.perf_counter_ns()
        value, partition = cut3_linear(s)
        cuts = partition.cuts
        nanos = time.perf_counter_ns() - t0
    out = [
        f"algorithm={algo}",
        f"n={n}",
        f"pieces={q}",
        f"value={format_number(value)}",
        f"cuts={_seq(cuts)}",
        f"nanos={nanos}",
    ]
    print("\n".join(out))
    if args.dump_tables and tables is not None:
        print(tables.format_tables())
        print(tables.format_trace(q + 1))
    return 0


def cmd_gen(args) -> int:
    s = gen_instance(args.seed, args.n, args.value_max)
    line = _seq(s.values) + "\n"
    if args.out:
        Path(args.out).write_text(line)
    else:
        sys.stdout.write(line)
    return 0


def _int_list(raw: str) -> list[int]:
    items = [tok for tok in raw.replace(",", " ").split() if tok]
    return [int(tok) for tok in items]


def cmd_bench(args) -> int:
    try:
        sizes = _int_list(args.sizes)
        ks = _int_list(args.ks)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if not sizes or not ks:
        print("error: --sizes and --ks must be non-empty", file=sys.stderr)
        return 1
    if args.seeds < 1:
        print("error: --seeds must be at least 1", file=sys.stderr)
        return 1
    budget = _oracle_budget()
    rows = []
    mismatches = []
    for n in sizes:
        for k in ks:
            if not 0 <= k <= n - 1:
                print(f"error: k={k} outside [0, {n - 1}]", file=sys.stderr)
                return 1
            for seed in range(args.seeds):
                s = gen_instance(seed, n, args.value_max)
                got = {}
                t0 = time.perf_counter_ns()
                value, _ = cut_string_dp(s, n - k)
                got["dp"] = (value, time.perf_counter_ns() - t0)
                t0 = time.perf_counter_ns()
                value, _ = maxmin_merge_fpt(s, k)
                got["fpt"] = (value, time.perf_counter_ns() - t0)
                t0 = time.perf_counter_ns()
                value, _ = maxmin_merge_by_search(s, k)
                got["search"] = (value, time.perf_counter_ns() - t0)
                if args.include_oracle and n <= budget.max_n:
                    t0 = time.perf_counter_ns()
                    value = oracle_maxmin_cut(s, n - k, budget)
                    got["oracle"] = (value, time.perf_counter_ns() - t0)
                baseline = got["dp"][0]
                if any(v != baseline for v, _ in got.values()):
                    report = " ".join(f"{a}={format_number(v)}" for a, (v, _) in sorted(got.items()))
                    mismatches.append(f"mismatch n={n} k={k} seed={seed}: {report}")
                for algo, (v, nanos) in got.items():
                    rows.append((algo, n, k, seed, v, nanos))
    if mismatches:
        for line in mismatches:
            print(line, file=sys.stderr)
        print(f"error: {len(mismatches)} value mismatches, no CSV written", file=sys.stderr)
        return 4
    rows.sort(key=lambda r: (r[0], r[1], r[2], r[3]))
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["algorithm", "n", "k", "seed", "value", "nanos"])
        for algo, n, k, seed, v, nanos in rows:
            w.writerow([algo, n, k, seed, format_number(v), nanos])
    print(f"rows={len(rows)}")
    print(f"out={args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mergecut",
        description="Merge and cut strings of positive numbers.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    fm = sub.add_parser("fewest-merge", help="fewest merges so every number reaches a threshold")
    fm.add_argument("--input", required=True, help="instance file")
    fm.add_argument("--b", type=float, required=True, help="threshold every merged number must reach")
    fm.add_argument("--emit", choices=["merged", "plan", "partition"], default="merged")
    fm.set_defaults(func=cmd_fewest_merge)

    mm = sub.add_parser("maxmin-merge", help="exactly k merges maximizing the minimum")
    mm.add_argument("--input", required=True, help="instance file")
    mm.add_argument("--k", type=int, required=True, help="number of merges")
    mm.add_argument("--algo", choices=["dp", "fpt", "search", "oracle"], default="dp")
    mm.set_defaults(func=cmd_maxmin_merge)

    ct = sub.add_parser("cut", help="cut into a given number of pieces maximizing the minimum sum")
    ct.add_argument("--input", required=True, help="instance file")
    ct.add_argument("--pieces", type=int, required=True, help="number of pieces")
    ct.add_argument("--dump-tables", action="store_true", help="print the d/s tables and the backtrace")
    ct.set_defaults(func=cmd_cut)

    gn = sub.add_parser("gen", help="write a seeded random instance")
    gn.add_argument("--seed", type=int, required=True)
    gn.add_argument("--n", type=int, required=True)
    gn.add_argument("--value-max", type=int, default=20)
    gn.add_argument("--out", help="output file (default: standard output)")
    gn.set_defaults(func=cmd_gen)

    bn = sub.add_parser("bench", help="time dp/fpt/search on seeded instances and cross-check values")
    bn.add_argument("--sizes", required=True, help="comma-separated instance sizes")
    bn.add_argument("--ks", required=True, help="comma-separated merge counts")
    bn.add_argument("--seeds", type=int, default=5, help="seeds 0..N-1 per cell")
    bn.add_argument("--value-max", type=int, default=20)
    bn.add_argument("--out", required=True, help="CSV output path")
    bn.add_argument("--include-oracle", action="store_true", help="also run the exhaustive oracle where n is small enough")
    bn.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 1
    try:
        return args.func(args)
    except InstanceParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except Infeasible as e:
        print(str(e), file=sys.stderr)
        return 2
    except NonIntegerInput as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (MergeCutError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
