"""``atlas`` command line: atom tables, symmetries, model invariants, reduction, chains, catalogs."""

from __future__ import annotations

import argparse
import json
import sys

from . import atom as atoms
from .classify import classify, format_table, render
from .errors import BoundsError, ValidationError
from .model import (
    adp_from_json,
    chain_invariant,
    chain_summary,
    display_name,
    fingerprint,
    reduce,
    to_dot,
)
from .permgroup import iso_type, perm_order


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _table(args):
    return atoms.load_name_table(args.name_table) if getattr(args, "name_table", None) else atoms.load_name_table()


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def cmd_atoms(args, out):
    table = _table(args)
    found = atoms.enumerate_atoms(args.complexity, args.max_complexity)
    rows = []
    for f in found:
        rows.append((atoms.identify(f, table), f))
    rows.sort(key=lambda r: r[0])
    if args.format == "json":
        out.write(json.dumps([f.to_json(name) for name, f in rows], indent=2) + "\n")
        return 0
    header = ("name", "neg", "pos", "genus", "Sym", "|Sym|", "sigma", "tau")
    body = []
    for name, f in rows:
        neg, pos = atoms.boundary_circles(f)
        g = atoms.symmetry_group(f)
        body.append((name, neg, pos, atoms.genus(f), iso_type(g), g.order, list(f.sigma), list(f.tau)))
    out.write(f"saddle atoms of complexity {args.complexity}: {len(rows)}\n")
    out.write(format_table(header, body))
    return 0


def _load_atoms(args):
    table = _table(args)
    if args.atom:
        return [(args.atom, atoms.find_named(args.atom, table))]
    data = _read_json(args.file)
    items = data if isinstance(data, list) else [data]
    return [(atoms.identify(f, table), f) for f in (atoms.FGraph.from_json(d) for d in items)]


def cmd_sym(args, out):
    for name, f in _load_atoms(args):
        g = atoms.symmetry_group(f)
        neg, pos = atoms.boundary_circles(f)
        out.write(f"atom {name}: m={f.m} sigma={list(f.sigma)} tau={list(f.tau)}\n")
        out.write(f"boundary circles: {neg} negative, {pos} positive; genus {atoms.genus(f)}\n")
        out.write(f"Sym = {iso_type(g)} (order {g.order})\n")
        rows = []
        for p in g:
            rows.append((list(p), perm_order(p), atoms.half_turn_count(f, p), "yes" if atoms.free_on_atom(f, p) else "no"))
        out.write(format_table(("element", "order", "fixed saddles", "free"), rows))
        ext = atoms.extended_symmetries(f)
        moves = sorted({tag for _, tag in ext}, key=atoms.MOVES.index)
        out.write(f"extended symmetries: {len(ext)} (moves realized: {', '.join(moves)})\n")
    return 0


def _load_model(args):
    table = _table(args)
    adp = adp_from_json(_read_json(args.model), table)
    model, report = reduce(adp)
    return model, report, table


def cmd_invariants(args, out):
    model, _, table = _load_model(args)
    fp = fingerprint(model, table)
    if args.format == "json":
        out.write(json.dumps(fp.to_json(), indent=2) + "\n")
        return 0
    name = display_name(fp.m1[0], model.n, model.k)
    out.write(f"model: {name}\n")
    out.write(f"rank-0 points: {fp.rank0_count}\n")
    out.write(f"s (saddles fixed by a^(k/2)): {fp.s}\n")
    out.write(f"M1: {fp.m1[1]} x {fp.m1[0]}\n")
    out.write("M2: " + " + ".join(f"{c} x F{n}" for n, c in fp.m2) + "\n")
    out.write("tori: ({}, {})\n".format(*fp.torus_pair))
    out.write(f"chains: {chain_summary(fp.chains)}\n")
    return 0


def cmd_reduce(args, out):
    model, report, table = _load_model(args)
    name = atoms.identify(model.atom, table)
    result = display_name(name, model.n, model.k)
    if args.format == "json":
        data = model.to_json()
        data["atom"]["name"] = name
        data["reduction"] = dict(report, result=result)
        out.write(json.dumps(data, indent=2) + "\n")
        return 0
    out.write(f"|G| = {report['group_order']}, |N| = {report['N_order']}\n")
    out.write(f"m = {report['m']} -> m' = {report['m_prime']}\n")
    out.write(f"n = {report['n']} -> n' = {report['n_prime']}\n")
    out.write(f"k = {report['k']}\n")
    out.write(f"{result}\n")
    return 0


def cmd_chains(args, out):
    model, _, table = _load_model(args)
    if args.dot:
        out.write(to_dot(model, display_name(atoms.identify(model.atom, table), model.n, model.k)))
        return 0
    chains = chain_invariant(model)
    out.write(f"{len(chains)} chains\n")
    for ones, threes in chains:
        out.write(f"{ones} one-dimensional, {threes} three-dimensional\n")
    return 0


def cmd_classify(args, out):
    catalog = classify(args.complexity, args.max_complexity, _table(args))
    out.write(render(catalog, args.format))
    if args.strict and catalog.warnings:
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="atlas", description="Saddle-focus singularities of integrable systems.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("atoms", help="table of saddle atoms of one complexity")
    p.add_argument("--complexity", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--max-complexity", type=int, default=atoms.MAX_COMPLEXITY)
    p.add_argument("--name-table")
    p.set_defaults(func=cmd_atoms)

    p = sub.add_parser("sym", help="symmetry group of an atom")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--atom", help="atom name, e.g. C2 or X4")
    g.add_argument("--file", help="fgraph-v1 JSON file (object or list)")
    p.add_argument("--name-table")
    p.set_defaults(func=cmd_sym)

    for name, func, helptext in (
        ("invariants", cmd_invariants, "fingerprint of a model"),
        ("reduce", cmd_reduce, "reduce a model to its simple minimal model"),
        ("chains", cmd_chains, "orbit chains of a model"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--model", required=True, help="adp-v1 JSON file")
        p.add_argument("--name-table")
        if name == "chains":
            p.add_argument("--dot", action="store_true", help="emit the quotient incidence graph in DOT")
        else:
            p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)

    p = sub.add_parser("classify", help="catalog of saddle-focus singularities")
    p.add_argument("--complexity", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--strict", action="store_true", help="exit 2 if any pair is unresolved")
    p.add_argument("--max-complexity", type=int, default=atoms.MAX_COMPLEXITY)
    p.add_argument("--name-table")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ValidationError, BoundsError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"atlas: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
