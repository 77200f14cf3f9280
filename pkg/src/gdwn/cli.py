"""Command-line front end.

Subcommands: sieve (compute a table), classify (pair classification),
analyze (sieve + split detection), verify (property suites), tables
(golden-file regression).  Exit codes: 0 success, 1 verification
failure, 2 usage error, 3 resource/data error.  The GDWN_THREADS
environment variable caps worker pools used by the sweep suites.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import analysis, serialize, tables, words, wythoff
from .errors import (
    BudgetExceeded,
    GridTooLarge,
    InsufficientData,
    InvalidPair,
    SpecError,
)
from .games import GameSpec, validate_spec
from .sieve import (
    check_a_density,
    check_complementarity,
    check_u_density,
    compute_pi,
    delta_values_distinct,
    derive_rows,
    verify_involution,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

LOWER_PREFIX_11 = "12122121221"
UPPER_PREFIX_11 = "22122121221"

FIXTURE_PAIRS = [
    [(0, 1)],
    [(0, 1), (1, 1)],
    [(0, 1), (1, 1), (1, 2)],
    [(0, 1), (1, 1), (2, 3)],
    [(0, 1), (1, 1), (2, 4)],
    [(0, 1), (1, 1), (4, 6)],
    [(0, 1), (1, 1), (4, 7)],
]


def _parse_pairs(tokens: list[str]) -> GameSpec:
    pairs = []
    for token in tokens:
        parts = token.split(",")
        if len(parts) != 2:
            raise SpecError(f"pair {token!r} is not of the form p,q")
        pairs.append((int(parts[0]), int(parts[1])))
    return validate_spec(pairs)


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _report_line(ok: bool, name: str, detail: str = "") -> bool:
    status = "PASS" if ok else "FAIL"
    line = f"{status} {name}"
    if detail:
        line += f": {detail}"
    print(line)
    return ok


# --- subcommands -------------------------------------------------------------


def cmd_sieve(args) -> int:
    spec = _parse_pairs(args.pairs)
    table = compute_pi(spec, args.n, engine=args.engine)
    rows = derive_rows(table, args.mult_lo, args.mult_hi)
    if args.format == "csv":
        text = serialize.ptable_to_csv(table, rows)
    elif args.format == "json":
        text = serialize.dumps_json(serialize.ptable_to_json_doc(table, rows))
    else:
        text = serialize.render_table_text(table, rows)
    _write_output(text, args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    cls = wythoff.classify_pair(args.p, args.q)
    print(cls.describe())
    if cls.is_splitting:
        witness = words.find_split_witness(args.p, args.q)
        if witness is not None:
            m, n = witness
            print(
                f"difference witness: (m, n) = ({m}, {n}) with "
                f"(A_{n} - A_{m}, B_{n} - B_{m}) = ({args.p}, {args.q})"
            )
    return EXIT_OK


def cmd_analyze(args) -> int:
    spec = _parse_pairs(args.pairs)
    table = compute_pi(spec, args.n, engine=args.engine)
    series = (
        analysis.full_ratio_series(table)
        if args.full_series
        else analysis.ratio_series(table)
    )
    kwargs = dict(
        min_tail=args.min_tail,
        gap_resolution=args.gap_resolution,
        min_beam_fraction=args.min_beam_fraction,
    )
    if args.max_beams is not None:
        report = analysis.detect_multi_split(series, max_beams=args.max_beams, **kwargs)
    else:
        report = analysis.detect_split(series, **kwargs)
    if args.ratios_csv:
        _write_output(serialize.ratio_series_to_csv(series), args.ratios_csv)
    doc = serialize.split_report_to_json_doc(report, series)
    _write_output(serialize.dumps_json(doc), args.output)
    return EXIT_OK


def cmd_tables(args) -> int:
    if args.update:
        for path in tables.write_goldens():
            print(f"wrote {path}")
        return EXIT_OK
    all_ok = True
    for name in tables.TABLE_NAMES:
        ok, diff = tables.compare_table(name)
        _report_line(ok, f"table {name}")
        if not ok:
            sys.stdout.write(diff)
            all_ok = False
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


# --- verify suites -----------------------------------------------------------


def _specs_for(args) -> list[GameSpec]:
    if args.pairs:
        return [_parse_pairs(args.pairs)]
    return [validate_spec(p) for p in FIXTURE_PAIRS]


def _suite_involution(args) -> bool:
    ok = True
    for spec in _specs_for(args):
        table = compute_pi(spec, args.n)
        report = verify_involution(table)
        detail = "" if report.ok else f"violations {report.violations[:3]}"
        ok &= _report_line(
            report.ok, f"involution {spec.label()} n={args.n}", detail
        )
    return ok


def _suite_density(args) -> bool:
    ok = True
    for spec in _specs_for(args):
        table = compute_pi(spec, args.n)
        label = spec.label()
        bad_u = check_u_density(table)
        ok &= _report_line(not bad_u, f"upper-index density {label}",
                           "" if not bad_u else f"first failure n={bad_u[0]}")
        bad_a = check_a_density(table)
        ok &= _report_line(not bad_a, f"a-value density {label}",
                           "" if not bad_a else f"first failure m={bad_a[0]}")
        comp = check_complementarity(table)
        ok &= _report_line(comp.ok, f"complementarity {label}",
                           f"settled bound {comp.bound}")
        if spec.extends_wythoff():
            distinct = delta_values_distinct(table)
            ok &= _report_line(distinct, f"distinct differences {label}")
    return ok


def _suite_closed_forms(args) -> bool:
    s = args.s
    cases = [
        ("single_pair", dict(r=s, s=s)),
        ("zero_s", dict(s=s)),
        ("zero_s_and_ss", dict(s=s)),
        ("nim_extension", dict(r=s, s=s + 1)),
        ("nim_extension", dict(r=s, s=s)),
    ]
    ok = True
    for family, kw in cases:
        report = analysis.verify_closed_form(family, args.n, **kw)
        name = f"closed-form {family} " + ",".join(f"{k}={v}" for k, v in kw.items())
        detail = "" if report.ok else f"mismatches {report.mismatches[:3]}"
        ok &= _report_line(report.ok, name, detail)
    return ok


def _suite_prop43(args) -> bool:
    report = analysis.wythoff_equivalence_sweep(p_max=args.max_p, n_max=args.n)
    detail = (
        f"{report.checked_equivalent} shallow non-splitting, "
        f"{report.checked_splitting} splitting"
    )
    if not report.ok:
        detail += f"; failures {report.failures[:5]}"
    return _report_line(report.ok, f"equivalence sweep p<={args.max_p}", detail)


def _suite_prop44(args) -> bool:
    report = analysis.witness_classifier_sweep(max_pq=args.max_pq)
    detail = f"{report.checked} pairs"
    if not report.ok:
        detail += f"; failures {report.failures[:5]}"
    return _report_line(report.ok, f"witness/classifier agreement q<={args.max_pq}", detail)


def _suite_sturmian(args) -> bool:
    ok = True
    lower = words.word_prefix(words.LOWER, 11).as_string()
    upper = words.word_prefix(words.UPPER, 11).as_string()
    ok &= _report_line(lower == LOWER_PREFIX_11, "lower word prefix", lower)
    ok &= _report_line(upper == UPPER_PREFIX_11, "upper word prefix", upper)
    for kind in (words.LOWER, words.UPPER):
        report = words.check_balanced(kind, args.balance_n)
        ok &= _report_line(report.balanced, f"balance {kind} n={args.balance_n}")
    sums = words.factor_sum_report(args.maxlen, args.window)
    ok &= _report_line(
        sums.ok, f"factor sums maxlen={args.maxlen} window={args.window}"
    )
    lower_long = words.word_prefix(words.LOWER, args.window).letters
    upper_long = words.word_prefix(words.UPPER, args.window).letters
    agree = lower_long[1:] == upper_long[1:]
    ok &= _report_line(agree, "letter agreement past index 0")
    sets_equal = all(
        words.factor_set(lower_long, size) == words.factor_set(upper_long, size)
        for size in range(1, args.maxlen + 1)
    )
    ok &= _report_line(sets_equal, f"factor sets coincide through length {args.maxlen}")
    shift = wythoff.z_shift(wythoff.zeckendorf(14))
    ok &= _report_line(shift == 23, "zeckendorf right shift of 14", str(shift))
    return ok


def _suite_section3(args) -> bool:
    table = compute_pi(validate_spec([(0, 1), (1, 1), (1, 2)]), args.n)
    report = analysis.check_onetwo_patterns(table)
    ok = True
    ok &= _report_line(report.ladder_ok, f"gamma ladder n={args.n}",
                       "" if report.ladder_ok else str(report.ladder_violations[:3]))
    ok &= _report_line(report.ratio_bound_ok, "ratio bound b/a <= 3",
                       "" if report.ratio_bound_ok else str(report.ratio_violations[:3]))
    ok &= _report_line(
        report.oscillation_ok,
        f"suffix spread through index {report.oscillation_checked_through}",
    )
    return ok


SUITES = {
    "involution": _suite_involution,
    "density": _suite_density,
    "closed-forms": _suite_closed_forms,
    "prop43": _suite_prop43,
    "prop44": _suite_prop44,
    "sturmian": _suite_sturmian,
    "section3": _suite_section3,
}


def cmd_verify(args) -> int:
    ok = SUITES[args.suite](args)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gdwn",
        description="Sieve, classify and analyze generalized diagonal Wythoff Nim.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sieve = sub.add_parser("sieve", help="compute a table of losing pairs")
    p_sieve.add_argument("--pairs", nargs="+", required=True, metavar="P,Q")
    p_sieve.add_argument("--n", type=int, required=True)
    p_sieve.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    p_sieve.add_argument("--output", default=None)
    p_sieve.add_argument("--engine", choices=("auto", "naive", "fast"), default="auto")
    p_sieve.add_argument("--mult-lo", type=int, default=2, dest="mult_lo")
    p_sieve.add_argument("--mult-hi", type=int, default=2, dest="mult_hi")
    p_sieve.set_defaults(func=cmd_sieve)

    p_classify = sub.add_parser("classify", help="classify a pair (p, q)")
    p_classify.add_argument("p", type=int)
    p_classify.add_argument("q", type=int)
    p_classify.set_defaults(func=cmd_classify)

    p_analyze = sub.add_parser("analyze", help="sieve + ratio split detection")
    p_analyze.add_argument("--pairs", nargs="+", required=True, metavar="P,Q")
    p_analyze.add_argument("--n", type=int, required=True)
    p_analyze.add_argument("--engine", choices=("auto", "naive", "fast"), default="auto")
    p_analyze.add_argument("--full-series", action="store_true",
                           help="use pi(n)/n over all columns instead of b/a pairs")
    p_analyze.add_argument("--max-beams", type=int, default=None,
                           help="allow up to this many gaps (multi-beam report)")
    p_analyze.add_argument("--min-tail", type=int, default=None)
    p_analyze.add_argument("--gap-resolution", type=_parse_fraction,
                           default=analysis.DEFAULT_GAP_RESOLUTION)
    p_analyze.add_argument("--min-beam-fraction", type=float,
                           default=analysis.DEFAULT_MIN_BEAM_FRACTION)
    p_analyze.add_argument("--output", default=None, help="report JSON path (default stdout)")
    p_analyze.add_argument("--ratios-csv", default=None, dest="ratios_csv")
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser("verify", help="run a property suite")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.add_argument("--pairs", nargs="*", default=None, metavar="P,Q")
    p_verify.add_argument("--n", type=int, default=500)
    p_verify.add_argument("--s", type=int, default=2)
    p_verify.add_argument("--max-p", type=int, default=40, dest="max_p")
    p_verify.add_argument("--max-pq", type=int, default=300, dest="max_pq")
    p_verify.add_argument("--maxlen", type=int, default=12)
    p_verify.add_argument("--window", type=int, default=2000)
    p_verify.add_argument("--balance-n", type=int, default=500, dest="balance_n")
    p_verify.set_defaults(func=cmd_verify)

    p_tables = sub.add_parser("tables", help="regenerate reference tables and diff goldens")
    p_tables.add_argument("--update", action="store_true",
                          help="rewrite the golden files instead of diffing")
    p_tables.set_defaults(func=cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceeded, GridTooLarge, InsufficientData) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (SpecError, InvalidPair, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
