"""Command-line interface.

Exit codes: 0 = decided yes / valid, 1 = decided no / invalid,
2 = usage or input error.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from . import constructors as cons
from .algebra import validate
from .decide import (
    check_theorem_a,
    decide_dual_component_iso,
    decide_graded_symmetric,
    decide_sigma_frobenius,
    is_sigma_faithful,
    scan_sigma,
)
from .errors import GradfrobError, ParseError, ValidationError
from .exactmath import DEFAULT_SAMPLE_BOUND, DEFAULT_TRIALS, STRATEGIES, format_rational, parse_rational
from .fileformat import parse_algebra, serialize_algebra
from .group import parse_group
from .paratrophic import build_p
from .report import algebra_summary, decision_dict, finding_dict, render, theorem_a_dict

FAMILIES = ("aq", "exterior", "matrix", "group-algebra")


def parse_q(text: str | None, n: int) -> cons.QMatrix:
    """``"i,j=p/q;..."`` with 1-based ``i < j``; unlisted entries are 1."""
    entries = {(i, j): Fraction(1) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    for item in filter(None, (s.strip() for s in (text or "").split(";"))):
        try:
            key, value = item.split("=")
            i, j = (int(x) for x in key.split(","))
        except ValueError:
            raise ParseError(f"bad q entry {item!r}; expected i,j=p/q") from None
        if (i, j) not in entries:
            raise ParseError(f"q index ({i},{j}) must satisfy 1 <= i < j <= {n}")
        entries[(i, j)] = parse_rational(value)
    return cons.QMatrix(n, entries)


def format_q(q: cons.QMatrix) -> str:
    return ";".join(f"{i},{j}={format_rational(v)}" for (i, j), v in sorted(q.entries.items()))


def _elements(group, text: str) -> list:
    return [group.parse(s) for s in text.split(";") if s.strip()]


def _parse_alpha(a, variables, text: str | None) -> dict:
    if not text:
        return {l: Fraction(1) for l in variables}
    by_name = {name: k for k, name in enumerate(a.names)}
    alpha = {}
    for item in filter(None, (s.strip() for s in text.split(";"))):
        key, _, value = item.partition("=")
        key = key.strip()
        idx = int(key) if key.lstrip("-").isdigit() else by_name.get(key)
        if idx not in variables:
            raise ParseError(f"alpha entry {key!r} is not a basis element of degree sigma")
        alpha[idx] = parse_rational(value)
    for l in variables:
        alpha.setdefault(l, Fraction(0))
    return alpha


def _parse_cocycle(group, text: str | None) -> dict | None:
    if not text:
        return None
    table = {}
    for item in filter(None, (s.strip() for s in text.split(";"))):
        key, _, value = item.partition("=")
        g, sep, h = key.partition("|")
        if not sep:
            raise ParseError(f"bad cocycle entry {item!r}; expected g|h=value")
        table[(group.parse(g), group.parse(h))] = parse_rational(value)
    return table


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gradfrob", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=("text", "machine"), default="text")
    out.add_argument("--timings", action="store_true", help="add wall-clock timings to the report")

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("file", help="algebra file ('-' for stdin)")

    sigma = argparse.ArgumentParser(add_help=False)
    sigma.add_argument("--sigma", help="group element (default: the neutral element)")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--strategy", choices=STRATEGIES, default="auto")
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    search.add_argument("--sample-bound", type=int, default=DEFAULT_SAMPLE_BOUND)

    figure = argparse.ArgumentParser(add_help=False)
    figure.add_argument("--figure", metavar="PATH", help="also render a figure to PATH")

    sub.add_parser("validate", parents=[algebra, out], help="check the algebra axioms")
    sub.add_parser("check-frobenius", parents=[algebra, sigma, search, out, figure],
                   help="is the algebra sigma-graded Frobenius?")
    sub.add_parser("check-symmetric", parents=[algebra, search, out, figure],
                   help="is the algebra graded symmetric?")
    sub.add_parser("check-faithful", parents=[algebra, sigma, out], help="is the algebra left sigma-faithful?")
    sub.add_parser("check-dual-iso", parents=[algebra, sigma, search, out],
                   help="is (A_sigma)* isomorphic to A_eps as left A_eps-modules?")
    sub.add_parser("scan-sigma", parents=[algebra, search, out, figure],
                   help="sigma-graded Frobenius test for every sigma in the support")
    th = sub.add_parser("theorem-a", parents=[algebra, sigma, out, figure],
                        help="evaluate the three equivalent invertibility conditions at alpha")
    th.add_argument("--alpha", help="'l=p/q;...' by basis index or name (default: all ones)")

    make = sub.add_parser("make", help="write an algebra file for a built-in family")
    make.add_argument("--family", choices=FAMILIES, required=True)
    make.add_argument("--n", type=int)
    make.add_argument("--q", help="'i,j=p/q;...' (1-based, i<j; unlisted entries are 1)")
    make.add_argument("--grading", choices=cons.GRADINGS)
    make.add_argument("--group", help="group description for matrix/group-algebra families")
    make.add_argument("--tuple", help="';'-separated group elements g_1;...;g_n")
    make.add_argument("--cocycle", help="'g|h=value;...' (unlisted pairs are 1)")
    make.add_argument("-o", "--output")

    kd = sub.add_parser("koszul-dual", parents=[out], help="q -> q' = (-1/q_ij)")
    kd.add_argument("--n", type=int, required=True)
    kd.add_argument("--q")
    kd.add_argument("--grading", choices=cons.GRADINGS, default="z2n")
    kd.add_argument("-o", "--output", help="also write the algebra A(q') to this file")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _search_options(args) -> dict:
    return {"strategy": args.strategy, "seed": args.seed, "trials": args.trials,
            "sample_bound": args.sample_bound}


def _make_algebra(args):
    fam = args.family
    if fam in ("aq", "exterior"):
        if args.n is None:
            raise ParseError(f"--n is required for --family {fam}")
        if fam == "aq":
            return cons.make_aq(parse_q(args.q, args.n), args.grading or "z2n")
        return cons.make_exterior(args.n, args.grading or "z")
    if not args.group:
        raise ParseError(f"--group is required for --family {fam}")
    group = parse_group(args.group)
    if fam == "matrix":
        if not args.tuple:
            raise ParseError("--tuple is required for --family matrix")
        return cons.make_good_matrix(group, _elements(group, args.tuple))
    return cons.make_twisted_group_algebra(group, _parse_cocycle(group, args.cocycle))


def _execute(args) -> tuple[int, str]:
    fmt = getattr(args, "format", "text")
    if args.command == "make":
        a = _make_algebra(args)
        text = serialize_algebra(a)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
            return 0, ""
        return 0, text

    if args.command == "koszul-dual":
        q = parse_q(args.q, args.n)
        dual = cons.koszul_dual_q(q)
        report = {"command": "koszul-dual", "n": q.n, "q": format_q(q), "q_dual": format_q(dual)}
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(serialize_algebra(cons.make_aq(dual, args.grading)))
            report["output"] = args.output
        return 0, render(report, fmt)

    text = _read(args.file)
    if args.command == "validate":
        a = parse_algebra(text, check=False)
        vr = validate(a)
        report = {
            "command": "validate",
            "input": {"algebra": algebra_summary(a)},
            "passed": vr.passed,
            "violations": [finding_dict(f) for f in vr.violations],
        }
        return (0 if vr.passed else 1), render(report, fmt)

    a = parse_algebra(text)
    group = a.group
    sig = group.parse(args.sigma) if getattr(args, "sigma", None) else group.identity()
    inputs = {"algebra": algebra_summary(a)}
    if hasattr(args, "sigma"):
        inputs["sigma"] = group.format(sig)
    if hasattr(args, "strategy"):
        inputs.update(_search_options(args))
    report = {"command": args.command, "input": inputs}
    start = time.perf_counter()
    figure = getattr(args, "figure", None)

    if args.command == "scan-sigma":
        results = scan_sigma(a, **_search_options(args))
        details = [decision_dict(a, d) for d in results.values()]
        report["summary"] = [
            {"sigma": r["sigma"], "verdict": r["verdict"], "method": r["method"],
             "witness": r["witness"]["kind"] if r["witness"] else None}
            for r in details
        ]
        report["results"] = details
        report["outside_support"] = "no (zero-sigma-component)"
        code = 0 if any(d.verdict for d in results.values()) else 1
        if figure:
            from .plotting import plot_scan

            report["figure"] = plot_scan(a, results, figure)
    elif args.command == "theorem-a":
        variables = build_p(a, sig).variables
        r = check_theorem_a(a, sig, _parse_alpha(a, variables, args.alpha))
        report["result"] = theorem_a_dict(a, r)
        code = 0 if r.consistent else 1
        if figure:
            from .plotting import plot_paratrophic

            report["figure"] = plot_paratrophic(a, sig, r.alpha, figure)
    else:
        if args.command == "check-frobenius":
            d = decide_sigma_frobenius(a, sig, **_search_options(args))
        elif args.command == "check-symmetric":
            d = decide_graded_symmetric(a, **_search_options(args))
        elif args.command == "check-faithful":
            d = is_sigma_faithful(a, sig)
        else:
            d = decide_dual_component_iso(a, sig, **_search_options(args))
        report["result"] = decision_dict(a, d)
        code = 0 if d.verdict else 1
        if figure:
            from .plotting import plot_paratrophic

            report["figure"] = plot_paratrophic(a, d.sigma, d.alpha if d.verdict else None, figure)
    if args.timings:
        report["timings"] = {"decide_seconds": round(time.perf_counter() - start, 6)}
    return code, render(report, fmt)


def run(argv=None) -> tuple[int, str]:
    """Parse ``argv`` and execute; returns ``(exit code, report text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        return _execute(args)
    except ValidationError as exc:
        lines = [f"error: {exc}"] + [f"  {v}" for v in exc.report.violations[:10]]
        print("\n".join(lines), file=sys.stderr)
        return 2, ""
    except (GradfrobError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, ""


def main(argv=None) -> int:
    code, text = run(argv)
    if text:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
