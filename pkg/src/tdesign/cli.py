"""Command-line front end.

Exit codes: 0 success, 1 negative verdict, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .certify import certify_range, default_workers
from .configspace import ConfigurationError
from .constructions import cross_polytope, e8_roots, regular_polygon, two_octagons
from .designfile import DesignFileError, design_to_dict, dump_json, load_design
from .nonexistence import pell_admissible, pell_square_dimensions_recurrence
from .polyspace import gegenbauer
from .verify import DEFAULT_FLOAT_TOL, classify_tightness, design_residuals, moeller_bound

REPORT_SCHEMA = "tdesign.report/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _emit(args, command: str, inputs: dict, result: dict, started: float) -> None:
    report = {"schema": REPORT_SCHEMA, "command": command, "inputs": inputs, "result": result,
              "engine_version": __version__}
    if getattr(args, "timing", False):
        report["wall_time"] = time.perf_counter() - started
    text = dump_json(report)
    if getattr(args, "report", None):
        Path(args.report).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    started = time.perf_counter()
    cfg = load_design(args.design, args.backend)
    rep = design_residuals(cfg, args.degree, args.tolerance)
    tight = classify_tightness(cfg, args.degree, args.tolerance, report=rep)
    inputs = {"design": str(args.design), "degree": args.degree, "tolerance": args.tolerance,
              "backend": cfg.backend, "points": len(cfg)}
    _emit(args, "verify", inputs, {"design": rep.to_dict(), "classification": tight.to_dict()}, started)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_strength(args) -> int:
    started = time.perf_counter()
    cfg = load_design(args.design, args.backend)
    rep = design_residuals(cfg, args.max_degree, args.tolerance)
    strength = rep.strength()
    result = {"strength": strength, "design": rep.to_dict()}
    if strength >= 0:
        result["classification"] = classify_tightness(cfg, strength, args.tolerance, report=rep).to_dict()
    _emit(args, "strength", {"design": str(args.design), "max_degree": args.max_degree,
                             "backend": cfg.backend}, result, started)
    return EXIT_OK


def cmd_bound(args) -> int:
    started = time.perf_counter()
    if args.dim < 1 or args.shells < 1 or args.degree < 0:
        raise UsageError("need --dim >= 1, --shells >= 1, --degree >= 0")
    bound = moeller_bound(args.dim, args.shells, args.degree, args.with_origin)
    if args.report:
        print(bound)
    _emit(args, "bound", {"dim": args.dim, "shells": args.shells, "degree": args.degree,
                          "with_origin": args.with_origin}, {"bound": bound}, started)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "octagons":
        cfg = two_octagons(float(args.r1), float(args.r2), float(args.w1))
    elif args.kind == "polygon":
        cfg = regular_polygon(args.m, float(args.r), float(args.w))
    elif args.kind == "cross-polytope":
        cfg = cross_polytope(args.n, args.r, args.w)
    else:
        cfg = e8_roots(unit=args.unit)
    text = dump_json(design_to_dict(cfg, source=f"tdesign construct {args.kind}"))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gegenbauer(args) -> int:
    if args.dim < 2 or args.degree < 0:
        raise UsageError("need --dim >= 2 and --degree >= 0")
    q = gegenbauer(args.dim, args.degree)
    print(q(args.eval) if args.eval is not None else q)
    return EXIT_OK


def cmd_certify(args) -> int:
    started = time.perf_counter()
    if not 3 <= args.n_from <= args.n_to:
        raise UsageError(f"need 3 <= --from <= --to, got [{args.n_from}, {args.n_to}]")
    jobs = default_workers() if "TDL_JOBS" in os.environ else args.jobs
    cert = certify_range(args.n_from, args.n_to, jobs)
    summary = [f"range [{cert.n_lo}, {cert.n_hi}]: {cert.verdict}",
               f"admissible n: {cert.admissible}"]
    for n in cert.admissible:
        rep = cert.case1_reports[n]
        summary.append(f"  n={n}: Case I excluded at step {rep.failed_step}; "
                       f"Case II excluded at step {cert.case2_reports[n].failed_step if n in cert.case2_reports else 1}")
    print("\n".join(summary), file=sys.stderr)
    _emit(args, "certify", {"from": args.n_from, "to": args.n_to}, cert.to_dict(timing=args.timing), started)
    return EXIT_OK if cert.excluded else EXIT_FAIL


def cmd_pell(args) -> int:
    started = time.perf_counter()
    if not 2 <= args.n_from <= args.n_to:
        raise UsageError("need 2 <= --from <= --to")
    rows = []
    for n in pell_square_dimensions_recurrence(args.n_from, args.n_to):
        info = pell_admissible(n)
        rows.append({"n": n, "k": info.k, "k_even": info.k_even})
    _emit(args, "pell", {"from": args.n_from, "to": args.n_to}, {"solutions": rows}, started)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdesign", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def reporting(p):
        p.add_argument("--report", help="write the JSON report here instead of stdout")
        p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical reports)")

    p = sub.add_parser("verify", help="test a design file at a given degree")
    p.add_argument("design")
    p.add_argument("--degree", "-t", type=int, required=True)
    p.add_argument("--tolerance", type=float, default=DEFAULT_FLOAT_TOL)
    p.add_argument("--backend", choices=("auto", "rational", "float"), default="auto")
    reporting(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("strength", help="largest degree a design file achieves")
    p.add_argument("design")
    p.add_argument("--max-degree", type=int, default=12)
    p.add_argument("--tolerance", type=float, default=DEFAULT_FLOAT_TOL)
    p.add_argument("--backend", choices=("auto", "rational", "float"), default="auto")
    reporting(p)
    p.set_defaults(func=cmd_strength)

    p = sub.add_parser("bound", help="Moeller lower bound")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--shells", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--with-origin", action="store_true")
    reporting(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", help="write a known design as JSON")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("octagons")
    k.add_argument("--r1", type=_rational, default=Fraction(1))
    k.add_argument("--r2", type=_rational, default=Fraction(2))
    k.add_argument("--w1", type=_rational, default=Fraction(1))
    k = kinds.add_parser("polygon")
    k.add_argument("--m", type=int, required=True)
    k.add_argument("--r", type=_rational, default=Fraction(1))
    k.add_argument("--w", type=_rational, default=Fraction(1))
    k = kinds.add_parser("cross-polytope")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--r", type=_rational, default=Fraction(1))
    k.add_argument("--w", type=_rational, default=Fraction(1))
    k = kinds.add_parser("e8")
    k.add_argument("--unit", action="store_true", help="unit vectors (floats) instead of norm sqrt(2)")
    for k in kinds.choices.values():
        k.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("gegenbauer", help="print Q_{l,n-1} or evaluate it")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--eval", type=_rational)
    p.set_defaults(func=cmd_gegenbauer)

    p = sub.add_parser("certify", help="exclude tight 9-designs on 2 spheres for a range of n")
    p.add_argument("--from", dest="n_from", type=int, default=3)
    p.add_argument("--to", dest="n_to", type=int, default=300000)
    p.add_argument("--jobs", type=int, default=1)
    reporting(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("pell", help="list n with 6(n+1)(n+2) a perfect square")
    p.add_argument("--from", dest="n_from", type=int, default=2)
    p.add_argument("--to", dest="n_to", type=int, default=300000)
    reporting(p)
    p.set_defaults(func=cmd_pell)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, DesignFileError, ConfigurationError, ValueError) as exc:
        print(f"tdesign: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
