"""Command line front end: ``hochwerk verify|cohomology|steenrod|product``.

Exit status: 0 on success, 1 when a verification check fails, 2 on any error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cohomology, differentials, products, transport
from .cochains import dumps_cochain, read_cochain
from .errors import HochwerkError, NotGF2, UnknownOp
from .groups import group_by_name
from .rings import GF2, parse_ring
from .suites import DEFAULT_SAMPLES, SUITES, Context, report_json, report_tsv, run_suites

# name -> (function, number of cochain operands, extra integer argument or None)
OPS = {
    "gerstenhaber": (products.gerstenhaber_cup, 2, None),
    "circle": (products.circle_j, 2, "j"),
    "pre_lie": (products.pre_lie, 2, None),
    "bracket": (products.bracket, 2, None),
    "simplicial_cup": (products.simplicial_cup, 2, None),
    "cup_one": (products.cup_one, 2, None),
    "cup_one_term": (products.cup_one_term, 2, "j"),
    "cup_i": (products.cup_i, 2, "i"),
    "hom_simplicial_cup": (products.hom_simplicial_cup, 2, None),
    "hom_cup_i": (products.hom_cup_i, 2, "i"),
    "steenrod": (products.steenrod_square, 1, "i"),
    "delta": (differentials.hochschild_delta, 1, None),
    "b_star": (differentials.b_star, 1, None),
    "bar_coboundary": (differentials.bar_coboundary, 1, None),
    "phi": (transport.phi, 1, None),
    "psi": (transport.psi, 1, None),
    "iota_star": (transport.iota_star, 1, None),
    "pi_star": (transport.pi_star, 1, None),
}


def _common(p: argparse.ArgumentParser, ring_default="GF2"):
    p.add_argument("--group", required=True, help="C<n>, D<n>, S<n>, trivial, or a JSON Cayley table")
    p.add_argument("--ring", default=ring_default, help="Z, Q, GF2, GF3, ...")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--cap", type=int, default=None,
                   help="largest basis size to enumerate (default: $HOCHWERK_CAP or 2000000)")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "tsv"), default="tsv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hochwerk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity suites")
    _common(v)
    v.add_argument("--suite", action="append", default=None,
                   help=f"one of: all, {', '.join(SUITES)} (repeatable, comma-separated)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)

    c = sub.add_parser("cohomology", help="HH^n for n = 0..max-degree")
    _common(c)

    s = sub.add_parser("steenrod", help="Sq^i on a basis of HH^*(GF2[G]; GF2[G])")
    _common(s)

    p = sub.add_parser("product", help="apply an operation to serialized cochains")
    p.add_argument("--group", required=True)
    p.add_argument("--op", required=True, help=", ".join(OPS))
    p.add_argument("lhs")
    p.add_argument("rhs", nargs="?")
    p.add_argument("-i", type=int, default=None)
    p.add_argument("-j", type=int, default=None)
    p.add_argument("--out", default=None)
    return parser


def _emit(text: str, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    G = group_by_name(args.group)
    ctx = Context(G, parse_ring(args.ring), args.max_degree, args.seed, args.samples, args.cap)
    names = [n.strip() for s in (args.suite or ["all"]) for n in s.split(",") if n.strip()]
    results = run_suites(names, ctx)
    _emit((report_json if args.format == "json" else report_tsv)(ctx, results), args.out)
    return 0 if all(r.passed for checks in results.values() for r in checks) else 1


def cmd_cohomology(args) -> int:
    G = group_by_name(args.group)
    reports = cohomology.hh_reports(G, parse_ring(args.ring), args.max_degree, args.cap)
    fmt = cohomology.reports_to_json if args.format == "json" else cohomology.reports_to_tsv
    _emit(fmt(reports), args.out)
    return 0


def cmd_steenrod(args) -> int:
    ring = parse_ring(args.ring)
    if ring != GF2:
        raise NotGF2(f"Steenrod squares need GF2, got {ring}")
    G = group_by_name(args.group)
    entries = cohomology.steenrod_table(G, args.max_degree, ring, args.cap)
    fmt = cohomology.steenrod_to_json if args.format == "json" else cohomology.steenrod_to_tsv
    _emit(fmt(G, entries), args.out)
    return 0


def cmd_product(args) -> int:
    if args.op not in OPS:
        raise UnknownOp(f"unknown op {args.op!r}; choose from {', '.join(OPS)}")
    fn, arity, extra = OPS[args.op]
    G = group_by_name(args.group)
    operands = [read_cochain(args.lhs, G)]
    if arity == 2:
        if args.rhs is None:
            raise UnknownOp(f"{args.op} needs two cochain files")
        operands.append(read_cochain(args.rhs, G))
    elif args.rhs is not None:
        raise UnknownOp(f"{args.op} takes one cochain file")
    if extra is not None:
        value = getattr(args, extra)
        if value is None:
            raise UnknownOp(f"{args.op} needs -{extra}")
        operands.append(value)
    _emit(dumps_cochain(fn(*operands)), args.out)
    return 0


COMMANDS = {"verify": cmd_verify, "cohomology": cmd_cohomology,
            "steenrod": cmd_steenrod, "product": cmd_product}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (HochwerkError, OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"hochwerk: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
