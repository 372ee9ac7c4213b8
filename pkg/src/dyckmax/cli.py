"""Command-line front end.

Subcommands:

* series: coefficients of the strict or weak total series, [z**(2n)] for n=1..order
* table: per-n counts, exact means, and asymptotic means
* verify: run the internal identity suite and report PASS/FAIL per check
* paths: enumerate paths of one semi-length, summarised or listed

Exit codes: 0 success, 1 verification failure, 2 usage error.
The DYCKMAX_MAX_N environment variable overrides every resource guard.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from decimal import Decimal
from typing import Callable, List, Optional, Sequence, Tuple

from . import asympt, exact, genfun, paths

TABLE_GUARD = 10000
LIST_GUARD = 14
ORACLE_GUARD = 14
SERIES_MAX_ORDER = 500

FIELDS_TABLE = (
    "n",
    "catalan",
    "strict_total",
    "weak_total",
    "strict_mean",
    "weak_mean",
    "strict_asympt",
    "weak_asympt",
)


def _guard(default: int) -> int:
    raw = os.environ.get(paths.ENV_LIMIT)
    if raw is None or not raw.strip():
        return default
    return int(raw)


def _fmt6(x) -> str:
    if isinstance(x, Decimal):
        return str(x.quantize(Decimal("0.000001")))
    return "%.6f" % x


# ---------- output plumbing ----------

def _emit(kind: str, fields: Sequence[str], rows: List[dict], fmt: str, plain: Callable[[], None]) -> None:
    if fmt == "plain":
        plain()
    elif fmt == "json":
        print(json.dumps({"kind": kind, "records": rows}))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([row[f] for f in fields])


# ---------- series ----------

def cmd_series(args, parser) -> int:
    order = args.order
    if not 1 <= order <= SERIES_MAX_ORDER:
        parser.error("--order must lie in 1..%d" % SERIES_MAX_ORDER)
    values = _series_values(args.kind, order, args.via)
    rows = [{"n": n, "coefficient": str(c)} for n, c in enumerate(values, start=1)]
    _emit(
        args.kind,
        ("n", "coefficient"),
        rows,
        args.format,
        lambda: print(" ".join(str(c) for c in values)),
    )
    return 0


def _series_values(kind: str, order: int, via: str) -> List[int]:
    if via == "genfun":
        gf = genfun.strict_total_gf if kind == "strict" else genfun.weak_total_gf
        return genfun.z_coefficients(gf(order + 2), order)
    table = exact.divisor_table(order + 2)
    total = exact.strict_total if kind == "strict" else exact.weak_total
    return [total(n, table) for n in range(1, order + 1)]


# ---------- table ----------

def cmd_table(args, parser) -> int:
    n_max = args.n_max
    limit = _guard(TABLE_GUARD)
    if n_max < 1:
        parser.error("--n-max must be >= 1")
    if n_max > limit:
        parser.error(
            "--n-max %d exceeds the table guard %d (set %s to raise it)"
            % (n_max, limit, paths.ENV_LIMIT)
        )
    table = exact.divisor_table(n_max + 2)
    rows = []
    for n in range(1, n_max + 1):
        cat = exact.catalan(n)
        st = exact.strict_total(n, table)
        wk = exact.weak_total(n, table)
        rows.append(
            {
                "n": n,
                "catalan": str(cat),
                "strict_total": str(st),
                "weak_total": str(wk),
                "strict_mean": _fmt6(asympt._exact_ratio(st, cat, 40)),
                "weak_mean": _fmt6(asympt._exact_ratio(wk, cat, 40)),
                "strict_asympt": _fmt6(asympt.strict_mean_asympt(n)),
                "weak_asympt": _fmt6(asympt.weak_mean_asympt(n)),
            }
        )

    def plain() -> None:
        print(" ".join(FIELDS_TABLE))
        for row in rows:
            print(" ".join(str(row[f]) for f in FIELDS_TABLE))

    _emit("table", FIELDS_TABLE, rows, args.format, plain)
    return 0


# ---------- verify ----------

def cmd_verify(args, parser) -> int:
    if args.n_max_oracle > _guard(ORACLE_GUARD):
        parser.error("--n-max-oracle beyond the enumeration guard")
    if args.order < 12:
        parser.error("--order below 12 leaves nothing to verify")
    ok = True
    for name, failure in run_checks(args.n_max_oracle, args.order, args.inject_fault):
        if failure is None:
            print("PASS %s" % name)
        else:
            ok = False
            print("FAIL %s: %s" % (name, failure))
    print("verification %s" % ("OK" if ok else "FAILED"))
    return 0 if ok else 1


def run_checks(
    n_oracle: int, order: int, fault: Optional[str] = None
) -> List[Tuple[str, Optional[str]]]:
    """Run the identity suite; yields (check name, None or first discrepancy)."""
    results: List[Tuple[str, Optional[str]]] = []

    def add(name: str, fn: Callable[[], Optional[str]]) -> None:
        results.append((name, fn()))

    add("fixture-semi-length-4", _check_fixture)
    add("oracle-vs-closed-form-vs-series", lambda: _check_triple(n_oracle, order))
    add("height-partition", lambda: _check_height_partition(min(12, order - 2)))
    add("jet-vs-closed-slice", lambda: _check_jet_slices(min(30, order)))
    add("strict-raw-vs-telescoped", lambda: _check_raw(order, strict=True))
    add("weak-raw-vs-telescoped", lambda: _check_raw(order, strict=False))
    add("divisor-identity", lambda: _check_divisor(order, fault))
    add("residue-vs-substitution", lambda: _check_residue(min(20, order - 2)))
    return results


def _check_fixture() -> Optional[str]:
    t = paths.totals(4)
    got = (t.paths, t.strict_total, t.weak_total)
    if got != (14, 19, 29):
        return "expected (14, 19, 29) at n=4, got %r" % (got,)
    return None


def _check_triple(n_oracle: int, order: int) -> Optional[str]:
    m = min(n_oracle, order - 2)
    strict_series = genfun.z_coefficients(genfun.strict_total_gf(order), m)
    weak_series = genfun.z_coefficients(genfun.weak_total_gf(order), m)
    table = exact.divisor_table(m + 2)
    for n in range(1, m + 1):
        t = paths.totals(n)
        trio = (t.strict_total, exact.strict_total(n, table), strict_series[n - 1])
        if len(set(trio)) != 1:
            return "strict totals disagree at n=%d: oracle/closed/series %r" % (n, trio)
        trio = (t.weak_total, exact.weak_total(n, table), weak_series[n - 1])
        if len(set(trio)) != 1:
            return "weak totals disagree at n=%d: oracle/closed/series %r" % (n, trio)
        if t.paths != exact.catalan(n):
            return "path count at n=%d is %d, catalan says %d" % (n, t.paths, exact.catalan(n))
    return None


def _check_height_partition(n_max: int) -> Optional[str]:
    order = n_max + 2
    for label, jet in (("strict", genfun.strict_maxima_jet), ("weak", genfun.weak_maxima_jet)):
        total = genfun.Series.zero(genfun.U, order)
        for r in range(1, order + 1):
            total = total + jet(r, order).val
        got = genfun.z_coefficients(total, n_max)
        want = [exact.catalan(n) for n in range(1, n_max + 1)]
        if got != want:
            return "%s height slices sum to %r, catalan is %r" % (label, got, want)
    return None


def _check_jet_slices(order: int) -> Optional[str]:
    for r in range(1, 9):
        closed = genfun.strict_total_at_height(r, order)
        jet = genfun.strict_maxima_jet(r, order)
        if not closed.agrees(jet.dx):
            return "strict slice r=%d: closed form and jet derivative differ" % r
    return None


def _check_raw(order: int, strict: bool) -> Optional[str]:
    if strict:
        raw, tele = genfun.strict_total_gf_raw(order), genfun.strict_total_gf(order)
    else:
        raw, tele = genfun.weak_total_gf_raw(order), genfun.weak_total_gf(order)
    if not raw.agrees(tele):
        for k in range(order + 1):
            if raw.coeffs[k] != tele.coeffs[k]:
                return "first mismatch at u^%d: raw %s, telescoped %s" % (
                    k,
                    raw.coeffs[k],
                    tele.coeffs[k],
                )
    return None


def _check_divisor(order: int, fault: Optional[str]) -> Optional[str]:
    lhs = genfun.divisor_sum_gf(order)
    table = exact.divisor_table(order)
    counts = [0] + [table[r] for r in range(1, order + 1)]
    if fault == "divisor-sieve" and order >= 12:
        counts[12] += 1  # deliberate corruption for the failure-path test
    for k in range(1, order + 1):
        if lhs.coeffs[k] != counts[k]:
            return "first mismatch at u^%d: series %s, sieve %d" % (
                k,
                lhs.coeffs[k],
                counts[k],
            )
    return None


def _check_residue(n_max: int) -> Optional[str]:
    # Both operands at order 2*n_max: compose truncates to the smaller order,
    # and the substitution series starts at z**2.
    order = 2 * n_max
    subst = genfun.u_from_z(order)
    for label, gf in (
        ("strict", genfun.strict_total_gf(order)),
        ("weak", genfun.weak_total_gf(order)),
    ):
        residue = genfun.z_coefficients(gf, n_max)
        composed = gf.compose(subst)
        direct = [composed.coeffs[2 * n] for n in range(1, n_max + 1)]
        if residue != direct:
            return "%s: residue rule %r, substitution %r" % (label, residue, direct)
        odd = [composed.coeffs[2 * n + 1] for n in range(0, n_max - 1)]
        if any(odd):
            return "%s series has odd z coefficients %r" % (label, odd)
    return None


# ---------- paths ----------

def cmd_paths(args, parser) -> int:
    n = args.n
    if n < 0:
        parser.error("--n must be >= 0")
    if args.list and n > _guard(LIST_GUARD):
        parser.error(
            "--list is guarded at n <= %d (set %s to raise it)"
            % (_guard(LIST_GUARD), paths.ENV_LIMIT)
        )
    try:
        if args.list:
            for p in paths.enumerate_paths(n):
                s = paths.stats(p)
                print(
                    "%s h=%d strict=%d weak=%d"
                    % (p.steps, s.height, s.strict_ltr, s.weak_ltr)
                )
            return 0
        t = paths.totals(n)
        print(
            "n=%d paths=%d strict=%d weak=%d"
            % (n, t.paths, t.strict_total, t.weak_total)
        )
        return 0
    except paths.EnumerationLimit as exc:
        parser.error(str(exc))
        return 2  # not reached; parser.error raises SystemExit


# ---------- wiring ----------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckmax",
        description="Strict and weak left-to-right maxima in Dyck paths: "
        "exact counts, series, and asymptotics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="coefficients of a maxima total series")
    p.add_argument("--kind", choices=("strict", "weak"), required=True)
    p.add_argument("--order", type=int, required=True, help="largest semi-length, 1..%d" % SERIES_MAX_ORDER)
    p.add_argument("--via", choices=("exact", "genfun"), default="exact")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("table", help="counts, exact means, asymptotic means")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the internal identity suite")
    p.add_argument("--n-max-oracle", type=int, default=10)
    p.add_argument("--order", type=int, default=50)
    p.add_argument(
        "--inject-fault",
        choices=("divisor-sieve",),
        default=None,
        help="test hook: corrupt one input so the suite must fail",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paths", help="enumerate one semi-length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print every path")
    p.set_defaults(func=cmd_paths)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


def entrypoint() -> None:
    sys.exit(main())
