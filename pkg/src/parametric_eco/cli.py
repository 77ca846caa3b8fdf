"""Command line interface: ``seq``, ``gf``, ``paths``, ``matrix show``, ``verify``.

Exit codes: 0 success, 1 verification failure, 2 rule parse error,
3 unknown name, 4 invalid argument.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .algebra import Polynomial, Substitution, parse_var
from .closedform import catalan_series, f0_series, fk_series, g1_series, gn_series
from .dyck import DEFAULT_LIMIT, STATISTICS, iter_paths, stats, weighted_sum
from .prodmat import (
    dyck_main_matrix,
    f0_matrix,
    fibonacci_example1,
    fibonacci_example2,
    gf_series,
    sequence,
    truncate,
)
from .rules import BUILTIN_RULES, RuleError, RuleSyntaxError, builtin_rule, parse_rule, rule_to_matrix
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_UNKNOWN, EXIT_ARG = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(f"{self.prog}: error: {message}", EXIT_ARG)


NAMED_MATRICES = {
    "dyck-main": dyck_main_matrix,
    "dyck-high-peak": lambda: dyck_main_matrix().substitute({"x*": 1}),
    "f0": f0_matrix,
    "fibonacci": fibonacci_example1,
    "fibonacci-poly": fibonacci_example2,
}


def parse_substitutions(items) -> Substitution:
    """``["x0=2", "x*=1", "y1=1+t"]`` -> Substitution."""
    mapping = {}
    for item in items or ():
        target, sep, value = item.partition("=")
        target, value = target.strip(), value.strip()
        if not sep or not target or not value:
            raise CliError(f"bad --set {item!r}: expected TARGET=VALUE", EXIT_ARG)
        try:
            if target not in ("x*", "y*"):
                parse_var(target)
            mapping[target] = Polynomial.parse(value)
        except ValueError as exc:
            raise CliError(f"bad --set {item!r}: {exc}", EXIT_ARG) from None
    return Substitution(mapping)


def _emit(args, command: str, params: dict, labels: list[str], polys: list[Polynomial], out):
    if args.format == "json":
        doc = {"command": command, "params": params, "result": [p.to_json() for p in polys]}
        out.write(json.dumps(doc) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "value"])
        for lab, p in zip(labels, polys):
            w.writerow([lab, str(p)])
    else:
        out.write(", ".join(str(p) for p in polys) + "\n")


def _load_rule(args):
    if args.rule:
        try:
            with open(args.rule, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read rule file: {exc}", EXIT_ARG) from None
        try:
            return parse_rule(text)
        except RuleSyntaxError as exc:
            raise CliError(f"{args.rule}: {exc}", EXIT_PARSE) from None
    try:
        return builtin_rule(args.builtin)
    except KeyError as exc:
        raise CliError(str(exc.args[0]), EXIT_UNKNOWN) from None


def cmd_seq(args, out) -> int:
    if args.terms < 1:
        raise CliError("--terms must be >= 1", EXIT_ARG)
    rule = _load_rule(args)
    sub = parse_substitutions(args.set)
    try:
        P = rule_to_matrix(rule, args.terms).substitute(sub)
        terms = sequence(P, args.terms - 1)
    except RuleError as exc:
        raise CliError(str(exc), EXIT_ARG) from None
    params = {"rule": args.rule or args.builtin, "terms": args.terms, "set": args.set or []}
    _emit(args, "seq", params, [str(n) for n in range(len(terms))], terms, out)
    return EXIT_OK


def _gf_form(form: str, order: int):
    kind, _, arg = form.partition(":")
    if kind == "matrix":
        if arg not in NAMED_MATRICES:
            raise CliError(f"unknown matrix {arg!r}; choose from {sorted(NAMED_MATRICES)}", EXIT_UNKNOWN)
        return gf_series(NAMED_MATRICES[arg](), order)
    if kind in ("fk", "gn"):
        try:
            k = int(arg)
        except ValueError:
            raise CliError(f"form {form!r} needs an integer, e.g. {kind}:2", EXIT_ARG) from None
        if k < (0 if kind == "fk" else 1):
            raise CliError(f"invalid index in {form!r}", EXIT_ARG)
        return fk_series(k, order) if kind == "fk" else gn_series(k, order)
    simple = {"f0": f0_series, "g1": g1_series, "catalan": catalan_series}
    if kind in simple and not arg:
        return simple[kind](order)
    raise CliError(f"unknown form {form!r}", EXIT_UNKNOWN)


def cmd_gf(args, out) -> int:
    if args.order < 0:
        raise CliError("--order must be >= 0", EXIT_ARG)
    series = _gf_form(args.form, args.order).substitute(parse_substitutions(args.set))
    params = {"form": args.form, "order": args.order, "set": args.set or []}
    _emit(args, "gf", params, [str(n) for n in range(len(series))], list(series), out)
    return EXIT_OK


PATH_COLUMNS = ["word", "rise_heights", "peak_heights", "s_counts", "contacts",
                "excursions", "final_descent", "double_rises"]


def _path_row(p) -> dict:
    st = stats(p)
    return {
        "word": p.steps,
        "rise_heights": list(st.rise_heights),
        "peak_heights": list(st.peak_heights),
        "s_counts": {str(m): c for m, c in st.segment_counts.items()},
        "contacts": st.contacts,
        "excursions": st.excursions,
        "final_descent": st.final_descent,
        "double_rises": st.double_rises,
    }


def _cell(v) -> str:
    if isinstance(v, list):
        return " ".join(map(str, v))
    if isinstance(v, dict):
        return " ".join(f"{k}:{c}" for k, c in v.items())
    return str(v)


def cmd_paths(args, out) -> int:
    if args.n < 0 or args.n > args.limit:
        raise CliError(f"--n must be between 0 and {args.limit}", EXIT_ARG)
    params = {"n": args.n, "stats": args.stats, "summary": args.summary}
    if args.summary:
        sums = {name: weighted_sum(args.n, name, args.limit) for name in STATISTICS}
        if args.format == "json":
            doc = {"command": "paths", "params": params,
                   "result": [{"statistic": k, "sum": v.to_json()} for k, v in sums.items()]}
            out.write(json.dumps(doc) + "\n")
        else:
            for k, v in sums.items():
                out.write(f"{k} sum: {v}\n")
        return EXIT_OK
    columns = PATH_COLUMNS if args.stats else ["word"]
    rows = [_path_row(p) if args.stats else {"word": p.steps} for p in iter_paths(args.n, args.limit)]
    if args.format == "json":
        out.write(json.dumps({"command": "paths", "params": params, "result": rows}) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_cell(r[c]) for c in columns])
    else:
        for r in rows:
            out.write("  ".join(_cell(r[c]) for c in columns) + "\n")
    return EXIT_OK


def cmd_matrix_show(args, out) -> int:
    if args.size < 1:
        raise CliError("--size must be >= 1", EXIT_ARG)
    if args.rule or args.builtin in BUILTIN_RULES and args.builtin not in NAMED_MATRICES:
        P = rule_to_matrix(_load_rule(args), args.size)
    elif args.builtin in NAMED_MATRICES:
        P = NAMED_MATRICES[args.builtin]()
    else:
        raise CliError(f"unknown matrix {args.builtin!r}", EXIT_UNKNOWN)
    P = P.substitute(parse_substitutions(args.set))
    size = args.size if P.size is None else min(args.size, P.size)
    rows = [[str(e) for e in row] for row in truncate(P, size)]
    if args.format == "json":
        out.write(json.dumps(rows) + "\n")
    else:
        width = max(len(c) for row in rows for c in row)
        for row in rows:
            out.write("  ".join(c.rjust(width) for c in row) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        checks = run_suite(args.suite, n_max=args.n_max, order=args.order, seed=args.seed)
    except KeyError as exc:
        raise CliError(str(exc.args[0]), EXIT_UNKNOWN) from None
    if args.format == "json":
        doc = {"command": "verify", "params": {"suite": args.suite, "n_max": args.n_max,
                                               "order": args.order, "seed": args.seed},
               "result": [{"check": c.name, "passed": c.passed, "detail": c.detail} for c in checks]}
        out.write(json.dumps(doc) + "\n")
    else:
        for c in checks:
            out.write(c.line() + "\n")
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parametric-eco", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p, choices=("text", "csv", "json")):
        p.add_argument("--format", choices=choices, default="text")

    def sets(p):
        p.add_argument("--set", action="append", metavar="TARGET=VALUE",
                       help="substitute, e.g. x0=2, x*=1, y1=1+t (specific beats x*/y*)")

    p = sub.add_parser("seq", help="sequence u P^n e of a succession rule")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", metavar="NAME")
    src.add_argument("--rule", metavar="FILE")
    p.add_argument("--terms", type=int, default=8)
    sets(p)
    fmt(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("gf", help="generating function coefficients")
    p.add_argument("--form", required=True,
                   help="matrix:<name>, f0, fk:<k>, g1, gn:<n> or catalan")
    p.add_argument("--order", type=int, default=8)
    sets(p)
    fmt(p)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("paths", help="enumerate Dyck paths")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--summary", action="store_true")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    fmt(p)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("matrix", help="matrix utilities")
    msub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    m = msub.add_parser("show", help="render a finite window")
    src = m.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", metavar="NAME")
    src.add_argument("--rule", metavar="FILE")
    m.add_argument("--size", type=int, default=6)
    sets(m)
    fmt(m, ("text", "json"))
    m.set_defaults(func=cmd_matrix_show)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", help=f"one of {sorted(SUITES) + ['all']}")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    fmt(p, ("text", "json"))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except CliError as exc:
        print(exc, file=sys.stderr)
        return exc.code


def run(argv) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout (used by tests)."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
