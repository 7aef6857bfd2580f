"""Command-line entry point.

Exit statuses: 0 ok, 1 verification failure, 2 usage error, 3 counterexample found.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import conjectures, golden, oracle
from .closed_forms import Mismatch
from .conjectures import ScanProperty
from .errors import InveulError
from .polyseq import Family
from .records import cache_path, load_cache, records_of, save_cache, write_csv, write_jsonl
from .recurrences import I_BASE, TriangleCache, a_row, b_row, i_row, j_row

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3

FAMILY_ALIASES = {"i": "I", "j": "J", "a": "a", "b": "b"}


def _family(text: str) -> str:
    try:
        return FAMILY_ALIASES[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"family must be one of I, J, a, b (got {text!r})")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="worker processes for enumeration (default: CPU count)")
    common.add_argument("--cache", default=argparse.SUPPRESS,
                        help="JSON-lines row cache (default: $INVEUL_CACHE)")

    p = argparse.ArgumentParser(
        prog="inveul",
        parents=[common],
        description="Descent distributions on involutions: tables, verification and conjecture scans.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[common], help="print rows of I, J, a or b")
    t.add_argument("--family", type=_family, required=True)
    t.add_argument("--from", dest="n_lo", type=_positive)
    t.add_argument("--to", dest="n_hi", type=_positive)
    t.add_argument("--n", dest="n_one", type=_positive, help="a single row")

    v = sub.add_parser("verify", parents=[common], help="cross-check recurrences, closed forms and enumeration")
    v.add_argument("--recurrence-max", type=_positive, default=50)
    v.add_argument("--oracle-max", type=int, default=None, help="largest I_n enumerated (default 12)")
    v.add_argument("--oracle-max-fpf", type=int, default=None,
                   help="largest J_n enumerated (default 14, or --oracle-max if given)")
    v.add_argument("--theorem-max", type=_positive, default=200,
                   help="bound for row sums, symmetry and unimodality")
    v.add_argument("--inject-fault", action="store_true",
                   help="corrupt the I_2 base case, to check that verification fails")

    s = sub.add_parser("scan", parents=[common], help="scan a theorem or conjecture over a range")
    s.add_argument("--property", dest="prop", required=True, choices=[q.value for q in ScanProperty])
    s.add_argument("--from", dest="n_lo", type=_positive, default=1)
    s.add_argument("--to", dest="n_hi", type=_positive, default=conjectures.DEFAULT_CEILING)
    s.add_argument("--threshold", type=_positive, default=conjectures.B_THRESHOLD,
                   help="size from which b_{n,k} >= 0 is conjectured (default 18)")

    r = sub.add_parser("reproduce", parents=[common], help="recompute the published tables")
    r.add_argument("--emit", choices=("diff", "latex"), default="diff")
    r.add_argument("--data-dir", type=Path, default=None, help="alternative directory of table CSVs")

    b = sub.add_parser("bench", parents=[common], help="time enumeration against the recurrence")
    b.add_argument("--n", dest="n_one", type=_positive, default=12)
    b.add_argument("--family", type=_family, default="I")
    return p


def _rows_for(family: str, n_lo: int, n_hi: int):
    for n in range(n_lo, n_hi + 1):
        if family == "I":
            yield i_row(n)
        elif family == "J":
            yield j_row(n, allow_odd=True)
        elif family == "a":
            yield a_row(n)
        elif n % 2 == 0:
            yield b_row(n)


def _render_text(rows, out) -> None:
    rows = list(rows)
    table = []
    for row in rows:
        cells = [(k, v) for k, v in (enumerate(row.coeffs) if hasattr(row, "coeffs") else row.items())]
        table.append((row.label, cells))
    widths: dict[int, int] = {}
    for _, cells in table:
        for k, v in cells:
            widths[k] = max(widths.get(k, 1), len(str(v)), len(f"k={k}"))
    label_w = max((len(label) for label, _ in table), default=1)
    ks = sorted(widths)
    out.write(" " * label_w + "  " + "  ".join(f"k={k}".rjust(widths[k]) for k in ks) + "\n")
    for label, cells in table:
        vals = dict(cells)
        line = "  ".join((str(vals[k]) if k in vals else "").rjust(widths[k]) for k in ks)
        out.write(label.ljust(label_w) + "  " + line.rstrip() + "\n")


def cmd_table(args, out) -> int:
    fam = args.family
    if args.n_one is not None:
        n_lo = n_hi = args.n_one
        if fam == "b" and n_lo % 2:
            raise _Usage(f"b rows exist only for even n, got {n_lo}")
    else:
        n_lo = args.n_lo or (2 if fam == "b" else 1)
        n_hi = args.n_hi
        if n_hi is None:
            raise _Usage("give --to or --n")
        if n_lo > n_hi:
            raise _Usage(f"empty range {n_lo}..{n_hi}")
    rows = list(_rows_for(fam, n_lo, n_hi))
    if args.format == "text":
        _render_text(rows, out)
    else:
        recs = [rec for row in rows for rec in records_of(row)]
        (write_csv if args.format == "csv" else write_jsonl)(recs, out)
    return EXIT_OK


def _table1_oracle_check(n_max: int, workers: int) -> conjectures.VerificationReport:
    report = conjectures.VerificationReport("table1-enumeration", ("oracle", "published"), (1, n_max))
    want: dict[tuple[str, int], dict[int, int]] = {}
    for rec in golden.load_table(1):
        want.setdefault((rec.family, rec.n), {})[rec.k] = rec.int_value
    for (fam, n), cells in sorted(want.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        if n > n_max:
            continue
        family = Family.INVOLUTION if fam == "I" else Family.FIXED_POINT_FREE
        got = oracle.brute_force_row(n, family, workers).coeffs
        expected = tuple(cells[k] for k in sorted(cells))
        report.checked += 1
        if got != expected:
            report.mismatch = Mismatch(fam, n, None, {"oracle": got, "published": expected})
            break
    return report


def cmd_verify(args, out) -> int:
    oracle_i = 12 if args.oracle_max is None else args.oracle_max
    if args.oracle_max_fpf is not None:
        oracle_j = args.oracle_max_fpf
    else:
        oracle_j = 14 if args.oracle_max is None else args.oracle_max
    caches = None
    if args.inject_fault:
        bad = dict(I_BASE)
        bad[2] = (1, 2)
        caches = {"I": TriangleCache("I", base=bad)}

    t0 = time.perf_counter()
    reports = [
        conjectures.cross_verify(args.recurrence_max, oracle_i, oracle_j, args.threads, caches),
        _table1_oracle_check(min(6, oracle_i, oracle_j), args.threads),
        conjectures.counting_check(args.theorem_max, caches),
        conjectures.theorem_check(args.theorem_max, caches),
        conjectures.s_recurrence_check(),
        conjectures.degree_check(),
    ]
    elapsed = time.perf_counter() - t0
    ok = all(r.ok for r in reports)
    if args.format == "json":
        json.dump({"ok": ok, "seconds": round(elapsed, 3), "reports": [r.to_dict() for r in reports]}, out, indent=2)
        out.write("\n")
    else:
        for r in reports:
            mark = "PASS" if r.ok else "FAIL"
            out.write(f"[{mark}] {r.name}: {r.checked} checks over {r.n_range[0]}..{r.n_range[1]}"
                      f" ({', '.join(r.methods)})\n")
            if r.mismatch is not None:
                out.write(f"       first failure: {r.mismatch.describe()}\n")
        out.write(f"{'all checks passed' if ok else 'verification FAILED'} in {elapsed:.1f}s\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_scan(args, out) -> int:
    prop = ScanProperty(args.prop)
    n_lo = args.n_lo
    if prop.even_only and n_lo == 1:
        n_lo = 2
    if n_lo > args.n_hi:
        raise _Usage(f"empty range {n_lo}..{args.n_hi}")
    result = conjectures.scan(prop, n_lo, args.n_hi, threshold=args.threshold)
    if args.format == "json":
        json.dump(result.to_dict(), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write("property,n,k,value,expected\n")
        for w in result.witnesses:
            out.write(f"{prop.value},{w.n},{w.k},{w.value},{str(w.expected).lower()}\n")
    else:
        out.write(f"{prop.value} on {n_lo}..{args.n_hi}: {result.status.value} ({result.checked} rows)\n")
        for w in result.witnesses:
            tag = "  (below threshold, expected)" if w.expected else ""
            out.write(f"  n={w.n} k={w.k} value={w.value}{tag}\n")
        for e in result.errors:
            out.write(f"  ERROR {e}\n")
    if result.errors:
        return EXIT_FAIL
    return EXIT_COUNTEREXAMPLE if result.witnesses else EXIT_OK


def cmd_reproduce(args, out) -> int:
    if args.emit == "latex":
        out.write(golden.latex_tables())
    count, diffs = golden.reproduce(args.data_dir)
    if args.emit == "latex":
        return EXIT_FAIL if diffs else EXIT_OK
    if args.format == "json":
        json.dump({"cells": count, "ok": not diffs, "diffs": [
            {"table": d.table, "family": d.family, "n": d.n, "k": d.k,
             "published": str(d.published), "computed": str(d.computed)} for d in diffs]}, out, indent=2)
        out.write("\n")
    else:
        for d in diffs:
            out.write(d.describe() + "\n")
        out.write(f"{count} cells compared, {len(diffs)} differences\n")
    return EXIT_FAIL if diffs else EXIT_OK


def cmd_bench(args, out) -> int:
    n = args.n_one
    family = Family.INVOLUTION if args.family in ("I", "a") else Family.FIXED_POINT_FREE
    t0 = time.perf_counter()
    rec = i_row(n) if family is Family.INVOLUTION else j_row(n, allow_odd=True)
    t1 = time.perf_counter()
    brute = oracle.brute_force_row(n, family, args.threads, max_n=n)
    t2 = time.perf_counter()
    same = rec == brute
    out.write(f"{family.value}_{n}: recurrence {t1 - t0:.4f}s, enumeration {t2 - t1:.3f}s "
              f"({brute.total()} words, {args.threads} workers), agree={same}\n")
    return EXIT_OK if same else EXIT_FAIL


class _Usage(Exception):
    pass


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "reproduce": cmd_reproduce,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.format = getattr(args, "format", "text")
    args.threads = getattr(args, "threads", oracle.default_workers())
    path = cache_path(getattr(args, "cache", None))
    if path is not None:
        load_cache(path)
    try:
        code = COMMANDS[args.command](args, out)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"inveul: error: {exc}\n")
        return EXIT_USAGE
    except InveulError as exc:
        sys.stderr.write(f"inveul: {exc}\n")
        return EXIT_FAIL
    if path is not None and args.command in ("table", "scan", "verify"):
        save_cache(path)
    return code


if __name__ == "__main__":
    sys.exit(main())
