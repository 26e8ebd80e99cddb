"""Command-line front end.

Exit codes: 0 when every check passes, 1 on a verified mismatch, 2 on usage
errors.  The default truncation order comes from ``SL2AFFINE_TRUNCATE``.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Iterable

from . import embeddings as emb
from . import qseries as qs
from . import suites
from .liealg import GENERALIZED, VERMA, HighestWeight
from .modules import CSV_COLUMNS, dimension_rows
from .partitions import MINUS, catalog_lt_R, enumerate_partitions, parse_partition
from .relations import leading_terms_sweep

# numeric identifiers accepted as aliases of the descriptive formula names
FORMULA_ALIASES = {
    "11.1.3": "principal",
    "11.1.4": "half-principal",
    "11.1.5": "Q-ratio-a",
    "11.1.6": "Q-ratio-b",
    "11.1.7": "P-ratio",
    "11.1.9": "principal-diagonal",
    "11.1.10": "principal-skew",
    "11.1.11": "principal-product",
    "11.1.12": "half-principal-product",
    "11.1.13": "half-principal-skew",
    "11.1.14": "no-multiples",
}
SERIES = ("P", "Q", "character", "gf", "denominator")
FORMULA_CHOICES = tuple(qs.FORMULAS) + tuple(FORMULA_ALIASES) + SERIES


class UsageError(Exception):
    pass


def _default_truncation() -> int:
    raw = os.environ.get("SL2AFFINE_TRUNCATE")
    if raw is None:
        return qs.DEFAULT_ORDER
    try:
        n = int(raw)
    except ValueError:
        return qs.DEFAULT_ORDER
    return n if n >= 1 else qs.DEFAULT_ORDER


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _module(args) -> HighestWeight:
    kind = getattr(args, "module", VERMA)
    if kind == GENERALIZED:
        if args.k1:
            raise UsageError("the generalized Verma module needs --k1 0")
        return HighestWeight.generalized(args.k0)
    return HighestWeight(args.k0, args.k1)


def _emit_lines(records: Iterable[dict], out) -> bool:
    ok = True
    for rec in records:
        ok &= rec["pass"]
        out.write(json.dumps(rec, sort_keys=True) + "\n")
    return ok


# ---------------------------------------------------------------------------
# commands

def cmd_dims(args, out) -> int:
    hw = HighestWeight(args.k0, args.k1)
    rows = dimension_rows(hw, args.depth, args.margin)
    if args.format == "json":
        json.dump([r.as_dict() for r in rows], out, indent=1)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            d = r.as_dict()
            w.writerow([d[c] for c in CSV_COLUMNS])
    else:
        out.write(f"{'d':>4} {'w':>4} {'dim M':>8} {'rank':>8} {'dim L':>6} {'count':>6}  match\n")
        for r in rows:
            out.write(f"{r.d:>4} {r.w:>4} {r.dim_M:>8} {r.rank_M1:>8} {r.dim_L:>6} "
                      f"{r.count_conditions:>6}  {'yes' if r.match else 'NO'}\n")
    return 0 if all(r.match for r in rows) else 1


def cmd_verify(args, out) -> int:
    s = args.suite
    if s == "identities":
        recs = suites.suite_identities(args.truncate)
    elif s == "relations":
        recs = suites.suite_relations(_module(args), args.depth, max_y0=args.max_y0)
    elif s == "leading-terms":
        recs = suites.suite_leading_terms(args.k if args.k is not None else args.k0 + args.k1)
    elif s == "basis":
        recs = suites.suite_basis(HighestWeight(args.k0, args.k1), args.depth)
    elif s == "embeddings":
        recs = suites.suite_embeddings(args.k if args.k is not None else args.k0 + args.k1)
    elif s == "virasoro":
        recs = suites.suite_virasoro(_module(args), args.depth, max_y0=args.max_y0)
    elif s == "dims":
        recs = suites.suite_dims(HighestWeight(args.k0, args.k1), args.depth)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown suite {s}")
    return 0 if _emit_lines(recs, out) else 1


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))
    return [getattr(args, n) for n in names]


def cmd_qseries(args, out) -> int:
    f = FORMULA_ALIASES.get(args.formula, args.formula)
    N = args.truncate
    if f == "P":
        s0, s1 = _need(args, "s0", "s1")
        series = qs.P(s0, s1, N)
    elif f == "Q":
        m0, t = _need(args, "m0", "two_m1")
        series = qs.Q(m0, t, N)
    elif f == "denominator":
        s0, s1 = _need(args, "s0", "s1")
        series = qs.weyl_denominator(s0, s1, N)
    elif f == "character":
        k0, k1, s0, s1 = _need(args, "k0", "k1", "s0", "s1")
        series = qs.specialized_character(k0, k1, s0, s1, N)
    elif f == "gf":
        k0, k1, s0, s1 = _need(args, "k0", "k1", "s0", "s1")
        series = qs.conditioned_partition_gf(k0, k1, (s0, s1), N)
    else:
        params = {n: getattr(args, n) for n in ("n", "k0", "k1", "s0", "s1") if getattr(args, n) is not None}
        try:
            series = qs.product_formula(f, N, **params)
        except KeyError as exc:
            raise UsageError(f"formula {args.formula} needs parameter --{exc.args[0]}") from None
    if args.format == "json":
        out.write(json.dumps({"formula": args.formula, "N": N, "coefficients": list(series.coeffs)}) + "\n")
    else:
        out.write(str(series) + "\n")
    return 0


def cmd_enumerate(args, out) -> int:
    n = 0
    for pi in enumerate_partitions(MINUS, -args.depth, weight=args.weight, conditions=(args.k0, args.k1)):
        out.write(str(pi) + "\n")
        n += 1
    sys.stderr.write(f"{n} partitions\n")
    return 0


def cmd_lt(args, out) -> int:
    k = args.k
    if args.computed:
        hw = HighestWeight.generalized(k) if args.k1 is None else HighestWeight(k - args.k1, args.k1)
        lt = leading_terms_sweep(k, hw, [args.n])[(args.m, args.n)]
        out.write((str(lt) if lt else "0") + "\n")
        return 0
    if abs(args.m) > k + 1:
        raise UsageError(f"|m| must be at most k+1 = {k + 1}")
    out.write(str(catalog_lt_R(k, args.m, args.n)) + "\n")
    return 0


def cmd_embeddings(args, out) -> int:
    report = emb.pair_report(parse_partition(args.pi), args.k)
    out.write(json.dumps(report, sort_keys=True) + "\n")
    return 0 if all(p["tag"] != "Inconsistent" for p in report["pair_classes"]) else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sl2affine", description="Exact computations for affine sl2 modules.")
    sub = p.add_subparsers(dest="command", required=True)

    def weights(sp, required=True):
        sp.add_argument("--k0", type=_nonneg, required=required, default=None if required else 0)
        sp.add_argument("--k1", type=_nonneg, required=required, default=None if required else 0)

    d = sub.add_parser("dims", help="dimension table with the partition-count oracle")
    weights(d)
    d.add_argument("--depth", type=_nonneg, required=True)
    d.add_argument("--margin", type=_nonneg, default=1, help="extra weights beyond the integrable window")
    d.add_argument("--format", choices=("json", "csv", "text"), default="text")
    d.add_argument("--output", help="write to this file instead of stdout")
    d.set_defaults(func=cmd_dims)

    v = sub.add_parser("verify", help="run a verification suite, one JSON line per check")
    v.add_argument("--suite", required=True, choices=suites.SUITES)
    weights(v, required=False)
    v.add_argument("--k", type=_nonneg)
    v.add_argument("--depth", type=_nonneg, default=4)
    v.add_argument("--module", choices=(VERMA, GENERALIZED), default=VERMA)
    v.add_argument("--max-y0", type=_nonneg, default=1, help="bound on y(0) factors in Verma basis vectors")
    v.add_argument("--truncate", type=_positive, default=_default_truncation())
    v.add_argument("--output")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("qseries", help="expand a product or character to a fixed order")
    q.add_argument("--formula", required=True, choices=FORMULA_CHOICES)
    for name in ("n", "k0", "k1", "s0", "s1", "m0", "two-m1"):
        q.add_argument("--" + name, type=_nonneg)
    q.add_argument("--truncate", type=_positive, default=_default_truncation())
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--output")
    q.set_defaults(func=cmd_qseries)

    e = sub.add_parser("enumerate", help="list partitions obeying the difference and initial conditions")
    weights(e)
    e.add_argument("--depth", type=_nonneg, required=True)
    e.add_argument("--weight", type=int, required=True)
    e.add_argument("--output")
    e.set_defaults(func=cmd_enumerate)

    lt = sub.add_parser("lt", help="leading term of a relation coefficient")
    lt.add_argument("--k", type=_nonneg, required=True)
    lt.add_argument("--m", type=int, required=True)
    lt.add_argument("--n", type=int, required=True)
    lt.add_argument("--computed", action="store_true", help="compute on a module instead of the catalog")
    lt.add_argument("--k1", type=_nonneg, help="with --computed: use the Verma module of weight (k-k1, k1)")
    lt.add_argument("--output")
    lt.set_defaults(func=cmd_lt)

    em = sub.add_parser("embeddings", help="embeddings of leading terms in a partition, with pair classes")
    em.add_argument("--k", type=_nonneg, required=True)
    em.add_argument("--pi", required=True, help='partition such as "x(-3)x(-2)^2 x(-1)"')
    em.add_argument("--output")
    em.set_defaults(func=cmd_embeddings)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    path = getattr(args, "output", None)
    out = open(path, "w", encoding="utf-8") if path else sys.stdout
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 1
    finally:
        if path:
            out.close()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
