"""Command-line front end.

Subcommands: sum, frac, equal, enumerate, count, classify,
verify-paper-example, bench, selftest. Output formats: human (default),
json, tsv; machine formats always render rationals as "p/q". Exit codes:
0 success, 1 verification failure, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from fractions import Fraction

from .core import dedekind_sum_bhk, dedekind_sum_naive, fractional_residue
from .equivalence import (
    NotSquarefreeError,
    build_report,
    classify_all,
    count_thm3,
    enumerate_bruteforce,
    factor_squarefree,
    same_fractional_part,
    thm2_condition,
)
from .exact import NotCoprimeError, NotInvertibleError, gcd, rat_str
from .reference import WORKED_EXAMPLE, verify_worked_example
from .selftest import run_selftest

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2

# hard ceiling for the O(n) evaluator inside bench; BHK has no such limit
NAIVE_BENCH_LIMIT = 10**7


def _emit_json(doc) -> None:
    print(json.dumps(doc, indent=2))


def _tsv(rows: list[tuple]) -> None:
    for row in rows:
        print("\t".join("" if cell is None else str(cell) for cell in row))


def _cmd_sum(args) -> int:
    evaluations = []
    if args.method in ("naive", "both"):
        evaluations.append(dedekind_sum_naive(args.m, args.n))
    if args.method in ("bhk", "both"):
        evaluations.append(dedekind_sum_bhk(args.m, args.n))
    if len(evaluations) == 2:
        a, b = evaluations
        if a.value != b.value or a.fractional_residue != b.fractional_residue:
            print(
                f"error: evaluators disagree on ({args.m}, {args.n}): "
                f"{rat_str(a.value)} vs {rat_str(b.value)}",
                file=sys.stderr,
            )
            return EXIT_VERIFY
    if args.format == "json":
        docs = [ev.to_dict() for ev in evaluations]
        _emit_json(docs[0] if len(docs) == 1 else docs)
    elif args.format == "tsv":
        rows = [("m", "n", "value", "residue", "method")]
        rows += [
            (ev.m, ev.n, rat_str(ev.value), ev.fractional_residue, ev.method.value)
            for ev in evaluations
        ]
        _tsv(rows)
    else:
        for ev in evaluations:
            print(
                f"S({ev.m}/{ev.n}) = {ev.value}    "
                f"[residue {ev.fractional_residue}, method {ev.method.value}]"
            )
        if len(evaluations) == 2:
            print("methods agree: yes")
    return EXIT_OK


def _cmd_frac(args) -> int:
    residue = fractional_residue(args.m, args.n)
    fraction = Fraction(residue, args.n)
    if args.format == "json":
        _emit_json(
            {"m": args.m % args.n, "n": args.n, "residue": residue, "fraction": rat_str(fraction)}
        )
    elif args.format == "tsv":
        _tsv([("m", "n", "residue", "fraction"),
              (args.m % args.n, args.n, residue, rat_str(fraction))])
    else:
        print(f"S({args.m % args.n}/{args.n}) mod 1 = {fraction}    [residue {residue}]")
    return EXIT_OK


def _cmd_equal(args) -> int:
    by_condition = thm2_condition(args.m1, args.m2, args.n)
    by_residue = same_fractional_part(args.m1, args.m2, args.n)
    if by_condition != by_residue:
        print(
            f"error: congruence condition and residue comparison disagree "
            f"on ({args.m1}, {args.m2}, {args.n})",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    r1 = fractional_residue(args.m1, args.n)
    r2 = fractional_residue(args.m2, args.n)
    if args.format == "json":
        _emit_json(
            {
                "n": args.n,
                "m1": args.m1 % args.n,
                "m2": args.m2 % args.n,
                "equivalent": by_condition,
                "residue_m1": r1,
                "residue_m2": r2,
            }
        )
    elif args.format == "tsv":
        _tsv([("n", "m1", "m2", "equivalent", "residue_m1", "residue_m2"),
              (args.n, args.m1 % args.n, args.m2 % args.n, by_condition, r1, r2)])
    else:
        verdict = "yes" if by_condition else "no"
        detail = (
            f"both have residue {r1}" if by_condition else f"residues {r1} vs {r2}"
        )
        print(
            f"S({args.m1 % args.n}/{args.n}) - S({args.m2 % args.n}/{args.n}) "
            f"is an integer: {verdict} ({detail})"
        )
    return EXIT_OK


def _plural(count: int, singular: str, plural: str | None = None) -> str:
    return f"{count} {singular if count == 1 else plural or singular + 's'}"


def _warn_not_squarefree(err: NotSquarefreeError) -> None:
    print(
        f"warning: {err.n} is not square-free (divisible by {err.prime}^2); "
        "falling back to the brute-force scan",
        file=sys.stderr,
    )


def _cmd_enumerate(args) -> int:
    try:
        factor_squarefree(args.n)
    except NotSquarefreeError as err:
        _warn_not_squarefree(err)
    report = build_report(args.m1, args.n, jobs=args.jobs)
    if args.format == "json":
        _emit_json(report.to_dict())
    elif args.format == "tsv":
        rows = [("n", "m1", "offset", "member")]
        rows += [
            (report.n, report.m1, offset, member)
            for offset, members in report.groups
            for member in members
        ]
        _tsv(rows)
    else:
        s_note = f", s = {report.s_exponent}" if report.s_exponent is not None else ""
        print(
            f"class of {report.m1} mod {report.n}: {_plural(report.count, 'member')}, "
            f"base {report.base_fraction}{s_note}"
        )
        # the queried residue always belongs to its own class; bracket it
        def flag(m: int) -> str:
            return f"[{m}]" if m == report.m1 else str(m)

        print("members:", *(flag(m) for m in report.members))
        for offset, members in report.groups:
            print(f"offset {offset:+d}:", *(flag(m) for m in members))
    return EXIT_OK


def _cmd_count(args) -> int:
    try:
        fact = factor_squarefree(args.n)
    except NotSquarefreeError as err:
        _warn_not_squarefree(err)
        count = len(enumerate_bruteforce(args.m1, args.n))
        s = None
    else:
        count, s = count_thm3(args.m1, fact)
    if args.format == "json":
        doc = {"n": args.n, "m1": args.m1 % args.n, "count": count}
        if s is not None:
            doc["s"] = s
        _emit_json(doc)
    elif args.format == "tsv":
        _tsv([("n", "m1", "count", "s"),
              (args.n, args.m1 % args.n, count, s)])
    else:
        law = f" = 2^{s}" if s is not None else " (brute force; no 2^s law)"
        print(f"class of {args.m1 % args.n} mod {args.n}: {_plural(count, 'member')}{law}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    classes = classify_all(args.n, jobs=args.jobs)
    if args.format == "json":
        _emit_json(
            {
                "n": args.n,
                "classes": [
                    {"residue": r, "members": ms} for r, ms in classes
                ],
            }
        )
    elif args.format == "tsv":
        rows = [("residue", "size", "members")]
        rows += [(r, len(ms), ",".join(map(str, ms))) for r, ms in classes]
        _tsv(rows)
    else:
        units = sum(len(ms) for _, ms in classes)
        print(
            f"n = {args.n}: {_plural(len(classes), 'class', 'classes')} over "
            f"{_plural(units, 'unit')}"
        )
        for r, ms in classes:
            print(f"residue {r}:", *ms)
    if args.plot:
        from .plotting import save_classify_figure

        save_classify_figure(args.n, classes, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    ok, diffs = verify_worked_example()
    expected = WORKED_EXAMPLE
    if args.format == "json":
        _emit_json(
            {
                "pass": ok,
                "n": expected.n,
                "m1": expected.m1,
                "base": rat_str(expected.base),
                "count": expected.count,
                "diffs": diffs,
            }
        )
    elif args.format == "tsv":
        _tsv([("status", "n", "m1", "base", "count"),
              ("PASS" if ok else "FAIL", expected.n, expected.m1,
               rat_str(expected.base), expected.count)])
        for diff in diffs:
            print(diff, file=sys.stderr)
    else:
        if ok:
            print(
                f"PASS: {expected.count}/{expected.count} members matched, "
                f"base {expected.base}"
            )
        else:
            print("FAIL: recomputed class differs from the reference table")
            for diff in diffs:
                print(f"  {diff}")
    return EXIT_OK if ok else EXIT_VERIFY


def _auto_bench_m(n: int) -> int:
    return next(m for m in itertools.chain((7,), itertools.count(2)) if gcd(m, n) == 1)


def _time_per_eval(fn, m: int, n: int, reps: int) -> float:
    start = time.perf_counter()
    for _ in range(reps):
        fn(m, n)
    return (time.perf_counter() - start) / reps


def _cmd_bench(args) -> int:
    cap = min(args.naive_cap, NAIVE_BENCH_LIMIT)
    rows = []
    failures = 0
    for n in args.n_values:
        m = args.m if args.m is not None else _auto_bench_m(n)
        if gcd(m, n) != 1:
            raise NotCoprimeError(m, n)
        fast = dedekind_sum_bhk(m, n)
        bhk_seconds = _time_per_eval(dedekind_sum_bhk, m, n, args.reps)
        naive_seconds = None
        agree = None
        if n <= cap:
            naive = dedekind_sum_naive(m, n)
            naive_seconds = _time_per_eval(dedekind_sum_naive, m, n, max(1, args.reps))
            agree = naive.value == fast.value
        # Eq-of-residues cross-check: convergent route vs extended Euclid
        residue_ok = (
            fast.fractional_residue == fractional_residue(m, n)
            and (fast.value - Fraction(fast.fractional_residue, n)).denominator == 1
        )
        if agree is False or not residue_ok:
            failures += 1
        rows.append(
            {
                "n": n,
                "m": m % n,
                "reps": args.reps,
                "naive_seconds": naive_seconds,
                "bhk_seconds": bhk_seconds,
                "agree": agree,
                "residue_check": residue_ok,
            }
        )
    if args.format == "json":
        _emit_json(rows)
    elif args.format == "tsv":
        header = ("n", "m", "reps", "naive_seconds", "bhk_seconds", "agree", "residue_check")
        _tsv([header] + [tuple(row[key] for key in header) for row in rows])
    else:
        print(f"{'n':>20} {'m':>10} {'naive s/eval':>14} {'bhk s/eval':>14} {'agree':>6} {'check':>6}")
        for row in rows:
            naive_cell = (
                f"{row['naive_seconds']:.3e}" if row["naive_seconds"] is not None else "skipped"
            )
            agree_cell = {True: "yes", False: "NO", None: "-"}[row["agree"]]
            check_cell = "ok" if row["residue_check"] else "FAIL"
            print(
                f"{row['n']:>20} {row['m']:>10} {naive_cell:>14} "
                f"{row['bhk_seconds']:>14.3e} {agree_cell:>6} {check_cell:>6}"
            )
    if args.plot:
        from .plotting import save_bench_figure

        save_bench_figure(rows, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return EXIT_VERIFY if failures else EXIT_OK


def _cmd_selftest(args) -> int:
    failures = run_selftest(sys.stdout)
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("human", "json", "tsv"),
        default="human",
        help="output format (default: human)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dedekind",
        description="Exact Dedekind sums, integrality of their differences, "
        "and fractional-part class enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="evaluate S(m/n) exactly")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument(
        "--method", choices=("naive", "bhk", "both"), default="bhk",
        help="evaluator: O(n) definitional sum, O(log n) closed form, or both",
    )
    _add_format(p)
    p.set_defaults(handler=_cmd_sum)

    p = sub.add_parser("frac", help="fractional part of S(m/n) via (m + m*) mod n")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    _add_format(p)
    p.set_defaults(handler=_cmd_frac)

    p = sub.add_parser("equal", help="is S(m1/n) - S(m2/n) an integer?")
    p.add_argument("m1", type=int)
    p.add_argument("m2", type=int)
    p.add_argument("n", type=int)
    _add_format(p)
    p.set_defaults(handler=_cmd_equal)

    p = sub.add_parser("enumerate", help="all m2 sharing the fractional part of S(m1/n)")
    p.add_argument("m1", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=1, help="parallel scan workers")
    _add_format(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("count", help="size of the class of m1 mod n (2^s when n square-free)")
    p.add_argument("m1", type=int)
    p.add_argument("n", type=int)
    _add_format(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("classify", help="partition all units mod n into classes")
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=1, help="parallel scan workers")
    p.add_argument("--plot", metavar="PATH", help="write a class-size figure to PATH")
    _add_format(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser(
        "verify-paper-example",
        help="recompute the n=15015, m1=17 class and diff the published table",
    )
    _add_format(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("bench", help="time the O(n) and O(log n) evaluators")
    p.add_argument(
        "n_values", type=int, nargs="*", metavar="N",
        default=[101, 1009, 10007, 100003, 10**9 + 7, 10**15 + 37],
        help="moduli to time (default: a ladder up to 10^15+37)",
    )
    p.add_argument("--m", type=int, default=None, help="numerator (default: auto-picked coprime)")
    p.add_argument("--reps", type=int, default=3, help="repetitions per timing (default: 3)")
    p.add_argument(
        "--naive-cap", type=int, default=200_000,
        help=f"skip the O(n) path above this n (default: 200000, hard limit {NAIVE_BENCH_LIMIT})",
    )
    p.add_argument("--plot", metavar="PATH", help="write a timing figure to PATH")
    _add_format(p)
    p.set_defaults(handler=_cmd_bench)

    p = sub.add_parser("selftest", help="run the reduced-bound property suites")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (NotCoprimeError, NotInvertibleError, NotSquarefreeError, ValueError, ZeroDivisionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
