"""Command-line interface: check, construct, search, tabulate, verify.

Matrix files use the 'p n k' header format; `-` reads the matrix from
standard input, so subcommands compose under pipes (`construct ... |
mindist -`).  Output is plain text by default or line-delimited JSON
records with --format structured.  Exit codes: 0 success, 1 usage or
input error, 2 reserved for `verify-paper --strict` when any claim is
refuted.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import report as rpt
from .bounds import plotkin_average_bound, singleton_bound, stated_upper_bound
from .claims import export_catalog
from .code import BudgetExceededError, LinearCode, RankDeficientError
from .constructions import between, mod9_construction, repetition, zero_prefixed_repetition
from .matrix import MatrixFormatError, format_matrix, parse_matrix
from .search import build_table, check_monotonicity, lcd_max_exhaustive, lcd_max_random
from .verify import verify_claims

_FAMILIES = ("repetition", "zero-rep", "mod9-3", "mod9-4", "between")


def _read_matrix(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_matrix(text)


def _read_code(path: str) -> LinearCode:
    return LinearCode(_read_matrix(path))


def _fresh_seed() -> int:
    return int(np.random.SeedSequence().generate_state(1)[0])


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def _parse_range(text: str) -> list[int]:
    """'4' -> [4]; '2:10' -> [2..10] inclusive."""
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


# ---- subcommand handlers ---------------------------------------------------------------


def _cmd_check(args) -> int:
    code = _read_code(args.matrix)
    if args.format == "structured":
        _emit(rpt.encode({
            "version": rpt.FORMAT_VERSION, "record": "check",
            "p": code.p, "n": code.n, "k": code.k,
            "is_lcd": code.is_lcd(), "hull_dim": code.hull_dim(),
        }))
    else:
        _emit(f"LCD: {'true' if code.is_lcd() else 'false'}")
        _emit(f"hull_dim: {code.hull_dim()}")
    return 0


def _cmd_dual(args) -> int:
    dual = _read_code(args.matrix).dual()
    gen = dual.generator
    if args.format == "structured":
        _emit(rpt.encode({
            "version": rpt.FORMAT_VERSION, "record": "matrix",
            "p": gen.p, "n": gen.cols, "k": gen.rows,
            "rows": rpt.witness_lines(gen),
        }))
    else:
        sys.stdout.write(format_matrix(gen))
    return 0


def _cmd_mindist(args) -> int:
    code = _read_code(args.matrix)
    d = code.min_distance(budget=args.budget)
    if args.format == "structured":
        _emit(rpt.encode({
            "version": rpt.FORMAT_VERSION, "record": "mindist",
            "p": code.p, "n": code.n, "k": code.k, "d": d,
        }))
    else:
        _emit(str(d))
    return 0


def _cmd_weights(args) -> int:
    metrics = _read_code(args.matrix).metrics(budget=args.budget)
    if args.format == "structured":
        _emit(rpt.encode(rpt.metrics_record(metrics)))
    else:
        _emit(" ".join(str(c) for c in metrics.weight_distribution))
    return 0


def _build_family(args) -> LinearCode:
    family = args.family
    if family == "repetition":
        if args.n is None:
            raise ValueError("construct repetition requires --n")
        return repetition(args.n, args.q)
    if family == "zero-rep":
        if args.n is None:
            raise ValueError("construct zero-rep requires --n")
        return zero_prefixed_repetition(args.n, args.q)
    if family in ("mod9-3", "mod9-4"):
        if args.m is None:
            raise ValueError(f"construct {family} requires --m")
        return mod9_construction(int(family[-1]), args.m)
    if family == "between":
        if not (args.c1 and args.c2):
            raise ValueError("construct between requires --c1 and --c2")
        return between(_read_code(args.c1), _read_code(args.c2))
    raise ValueError(f"unknown family {family!r}")


def _emit_code_matrix(code: LinearCode, args, family: str | None = None) -> int:
    gen = code.generator
    if args.format == "structured":
        rec = {
            "version": rpt.FORMAT_VERSION, "record": "matrix",
            "p": gen.p, "n": gen.cols, "k": gen.rows,
            "rows": rpt.witness_lines(gen),
        }
        if family:
            rec["family"] = family
        _emit(rpt.encode(rec))
    else:
        sys.stdout.write(format_matrix(gen))
    return 0


def _cmd_construct(args) -> int:
    return _emit_code_matrix(_build_family(args), args, family=args.family)


def _cmd_between(args) -> int:
    combined = between(_read_code(args.c1), _read_code(args.c2))
    return _emit_code_matrix(combined, args, family="between")


def _cmd_bound(args) -> int:
    formula = {
        "stated": lambda: stated_upper_bound(args.n, args.k, args.q),
        "plotkin": lambda: plotkin_average_bound(args.n, args.k, args.q),
        "singleton": lambda: singleton_bound(args.n, args.k),
    }[args.formula]
    value = formula()
    if args.format == "structured":
        _emit(rpt.encode({
            "version": rpt.FORMAT_VERSION, "record": "bound",
            "formula": args.formula, "n": args.n, "k": args.k, "q": args.q,
            "value": value,
        }))
    else:
        _emit(str(value))
    return 0


def _cmd_search(args) -> int:
    if args.method == "random":
        seed = args.seed if args.seed is not None else _fresh_seed()
        entry = lcd_max_random(args.n, args.k, args.q, trials=args.trials,
                               seed=seed, budget=args.budget)
    else:
        entry = lcd_max_exhaustive(args.n, args.k, args.q, budget=args.budget,
                                   jobs=args.jobs,
                                   sign_reduction=args.sign_reduction)
    timing = not args.no_timing
    if args.format == "structured":
        _emit(rpt.encode(rpt.cell_record(entry, include_timing=timing)))
    else:
        _emit(rpt.render_cell_text(entry, include_timing=timing))
        if entry.witness is not None:
            sys.stdout.write(format_matrix(entry.witness))
    return 0


def _cmd_table(args) -> int:
    table = build_table(_parse_range(args.n), _parse_range(args.k), args.q,
                        budget=args.budget, jobs=args.jobs,
                        trials=args.trials, seed=args.seed)
    violations = check_monotonicity(table) if args.check_monotonic else None
    timing = not args.no_timing
    if args.format == "structured":
        for entry in table:
            if hasattr(entry, "reason"):
                _emit(rpt.encode(rpt.skipped_record(entry)))
            else:
                _emit(rpt.encode(rpt.cell_record(entry, include_timing=timing)))
        if violations is not None:
            for v in violations:
                _emit(rpt.encode(rpt.violation_record(v)))
    else:
        _emit(rpt.render_table_text(table, include_timing=timing,
                                    violations=violations))
    if args.figures:
        from .figures import save_table_figures

        paths = save_table_figures(table, args.figures)
        print("wrote figures: " + " ".join(paths), file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    result = verify_claims(budget=args.budget, seed=args.seed, jobs=args.jobs)
    if args.claims_out:
        with open(args.claims_out, "w", encoding="utf-8") as fh:
            json.dump(export_catalog(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.format == "structured":
        for claim_result in result.results:
            _emit(rpt.encode(rpt.claim_record(claim_result)))
        _emit(rpt.encode(rpt.summary_record(result)))
    else:
        _emit(rpt.render_verify_text(result))
    if args.figures:
        from .figures import save_verify_figure

        path = save_verify_figure(result, args.figures)
        print(f"wrote figures: {path}", file=sys.stderr)
    if args.strict and result.has_refutations:
        return 2
    return 0


# ---- parser -----------------------------------------------------------------------------


def _add_format(sub) -> None:
    sub.add_argument("--format", choices=("text", "structured"), default="text",
                     help="text (default) or line-delimited JSON records")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcdkit",
        description="LCD code toolkit: classify, construct, search, and "
                    "verify claims over small prime fields.")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    sub = subs.add_parser("check", help="LCD status and hull dimension of a code")
    sub.add_argument("matrix", help="matrix file, or - for stdin")
    _add_format(sub)
    sub.set_defaults(func=_cmd_check)

    sub = subs.add_parser("dual", help="generator matrix of the dual code")
    sub.add_argument("matrix")
    _add_format(sub)
    sub.set_defaults(func=_cmd_dual)

    sub = subs.add_parser("mindist", help="minimum distance of a code")
    sub.add_argument("matrix")
    sub.add_argument("--budget", type=int, default=None,
                     help="codeword enumeration cap")
    _add_format(sub)
    sub.set_defaults(func=_cmd_mindist)

    sub = subs.add_parser("weights", help="weight distribution and metrics")
    sub.add_argument("matrix")
    sub.add_argument("--budget", type=int, default=None)
    _add_format(sub)
    sub.set_defaults(func=_cmd_weights)

    sub = subs.add_parser("construct", help="emit a named code family member")
    sub.add_argument("family", choices=_FAMILIES)
    sub.add_argument("--n", type=int, default=None, help="code length")
    sub.add_argument("--m", type=int, default=None, help="family index")
    sub.add_argument("--q", type=int, default=3, help="field size (default 3)")
    sub.add_argument("--c1", default=None, help="first operand matrix file")
    sub.add_argument("--c2", default=None, help="second operand matrix file")
    _add_format(sub)
    sub.set_defaults(func=_cmd_construct)

    sub = subs.add_parser("between", help="combine two equal-length codes")
    sub.add_argument("c1", help="matrix file of the first code")
    sub.add_argument("c2", help="matrix file of the second code")
    _add_format(sub)
    sub.set_defaults(func=_cmd_between)

    sub = subs.add_parser("bound", help="distance bound values")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--q", type=int, default=3)
    sub.add_argument("--formula", choices=("stated", "plotkin", "singleton"),
                     default="plotkin")
    _add_format(sub)
    sub.set_defaults(func=_cmd_bound)

    sub = subs.add_parser("search", help="max LCD distance for one (n, k) cell")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--q", type=int, default=3)
    sub.add_argument("--method", choices=("exhaustive", "random"),
                     default="exhaustive")
    sub.add_argument("--trials", type=int, default=2000,
                     help="samples for --method random")
    sub.add_argument("--seed", type=int, default=None,
                     help="random-method seed; generated and recorded if omitted")
    sub.add_argument("--budget", type=int, default=None)
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--sign-reduction", action="store_true",
                     help="GF(3) only: fold column sign classes (same answers)")
    sub.add_argument("--no-timing", action="store_true",
                     help="omit elapsed_ms for byte-comparable reruns")
    _add_format(sub)
    sub.set_defaults(func=_cmd_search)

    sub = subs.add_parser("table", help="max LCD distance over an (n, k) grid")
    sub.add_argument("--n", required=True, help="length or range, e.g. 2:10")
    sub.add_argument("--k", required=True, help="dimension or range")
    sub.add_argument("--q", type=int, default=3)
    sub.add_argument("--budget", type=int, default=None)
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--trials", type=int, default=2000,
                     help="random fallback samples for over-budget cells")
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--check-monotonic", action="store_true",
                     help="also report dips d(n+1) < d(n) between exhaustive cells")
    sub.add_argument("--no-timing", action="store_true")
    sub.add_argument("--figures", default=None, metavar="DIR",
                     help="also render d-versus-n plots into DIR")
    _add_format(sub)
    sub.set_defaults(func=_cmd_table)

    sub = subs.add_parser("verify-paper",
                          help="evaluate every cataloged claim and report verdicts")
    sub.add_argument("--budget", type=int, default=None)
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--strict", action="store_true",
                     help="exit 2 when any claim is refuted")
    sub.add_argument("--claims-out", default=None, metavar="FILE",
                     help="also write the claim catalog as JSON")
    sub.add_argument("--figures", default=None, metavar="DIR",
                     help="also render a verdict chart into DIR")
    _add_format(sub)
    sub.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (MatrixFormatError, RankDeficientError, BudgetExceededError,
            ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
