"""Command-line interface: ``gcover <command> ...`` prints a JSON report.

Exit status is 0 on success, 1 for domain errors (an irregular action, an
unrealisable vector, ...) and 2 for malformed input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

from . import estimates
from .complex import is_closed_surface
from .errors import (DuplicateVertex, EmptySimplex, GcoverError, IndexOutOfRange,
                     NotAPermutation, NotASurface, ParseError, UnknownCommand)
from .fileio import Loaded, gv_from_json, load_action, load_group, load_surface
from .gcomplex import equivariant_f_vector, quotient, regularity, regularize
from .graphct import graph_covering_type
from .surface import (BranchingData, expand_for_lift, find_generating_vector,
                      jungerman_ringel, lift_triangulation, rh_genus,
                      surface_orbit_bounds)

SCHEMA = "gcover.report/1"
COMMANDS = ("check-regular", "regularize", "quotient", "fvector", "ct-graph",
            "surface-bounds", "gv-search", "lift", "jr", "rh", "bound")
# input-shape errors; everything else derived from GcoverError is a domain error
MALFORMED = (ParseError, UnknownCommand, NotAPermutation, IndexOutOfRange,
             EmptySimplex, DuplicateVertex)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _frac(x: Fraction):
    return x.numerator if x.denominator == 1 else str(x)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--group-cap", type=int, default=None,
                        help="maximum group order (default: $GCOVER_GROUP_CAP or 2048)")

    p = _Parser(prog="gcover", description="Finite group actions on simplicial complexes.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    for name in ("check-regular", "regularize", "quotient", "fvector", "ct-graph"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("action", help="action JSON file")

    s = sub.add_parser("surface-bounds", parents=[common])
    s.add_argument("--g-prime", type=int, required=True)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--periods", type=_int_list, default=[])

    s = sub.add_parser("gv-search", parents=[common])
    s.add_argument("group")
    s.add_argument("--g-prime", type=int, required=True)
    s.add_argument("--periods", type=_int_list, default=[])
    s.add_argument("--budget", type=int, default=2_000_000)

    s = sub.add_parser("lift", parents=[common])
    s.add_argument("k2", help="quotient surface JSON, may list branch_vertices")
    s.add_argument("group")
    s.add_argument("gv")
    s.add_argument("--branch-vertices", type=_int_list, default=None)
    s.add_argument("--expand", action="store_true",
                   help="first subdivide so branch vertices are pairwise non-adjacent")

    s = sub.add_parser("jr", parents=[common])
    s.add_argument("--genus", type=int, required=True)
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--orientable", dest="orientable", action="store_true", default=True)
    grp.add_argument("--non-orientable", dest="orientable", action="store_false")

    s = sub.add_parser("rh", parents=[common])
    s.add_argument("--g-prime", type=int, required=True)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--periods", type=_int_list, default=[])

    b = sub.add_parser("bound", parents=[common])
    kinds = b.add_subparsers(dest="kind", parser_class=_Parser)
    k = kinds.add_parser("genus", parents=[common])
    k.add_argument("--gamma", type=int, required=True)
    k = kinds.add_parser("arithmetic", parents=[common])
    k.add_argument("--degrees", type=_int_list, required=True)
    k = kinds.add_parser("projective", parents=[common])
    k.add_argument("--n", type=int, required=True)
    k = kinds.add_parser("sphere-zpk", parents=[common])
    k.add_argument("--d", type=int, required=True)
    k.add_argument("--m", type=int, required=True)
    k.add_argument("--n", type=int, required=True)
    k = kinds.add_parser("cohom-sphere", parents=[common])
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--p", type=int, required=True)
    k.add_argument("--r", type=int, default=-1)
    k = kinds.add_parser("cyclic-join", parents=[common])
    k.add_argument("--components", type=_int_list, required=True)
    k = kinds.add_parser("relative", parents=[common])
    k.add_argument("--ct-fixed", type=int, required=True)
    k.add_argument("--sct-relative", type=int, required=True)
    return p


# -- commands ---------------------------------------------------------------

def _cmd_action(args, loader, warnings):
    X = load_action(args.action, loader, args.group_cap)
    G = X.group
    if args.command == "check-regular":
        return regularity(X).to_json(G)
    if args.command == "regularize":
        rep = regularity(X)
        Y = regularize(X)
        steps = 0 if rep.strictly_regular else (1 if rep.r1 else 2)
        return {"subdivisions": steps, "f_vector": list(Y.complex.f_vector()),
                "action": Y.to_json()}
    if args.command == "quotient":
        q = quotient(X)
        return {"complex": q.complex.to_json(), "projection": list(q.projection),
                "f_vector": list(q.complex.f_vector())}
    if args.command == "fvector":
        fg = equivariant_f_vector(X)
        f = X.complex.f_vector()
        return {"f_vector": list(f), "equivariant_f_vector": list(fg.orbit_counts),
                "stabilizer_orders": [list(s) for s in fg.stabilizer_orders],
                "identity_holds": fg.expanded(G.order) == f}
    total, strata = graph_covering_type(X)
    for s in strata:
        if s.degenerate:
            warnings.append(f"stratum of type order {s.orbit_type.order} has no loops; "
                            "formula applied verbatim")
    return {"ct_G": total, "strata": [s.to_json() for s in strata]}


def _cmd_gv_search(args, loader, warnings):
    G = load_group(args.group, loader, args.group_cap)
    gv = find_generating_vector(G, args.g_prime, args.periods, budget=args.budget)
    data = BranchingData(args.g_prime, G.order, tuple(args.periods))
    return {"found": gv is not None, "vector": gv.to_json(G) if gv else None,
            "data": data.to_json(), "genus": _frac(rh_genus(data))}


def _cmd_lift(args, loader, warnings):
    K, branch = load_surface(args.k2, loader)
    if args.branch_vertices is not None:
        branch = args.branch_vertices
    G = load_group(args.group, loader, args.group_cap)
    gv = gv_from_json(loader.read(args.gv), G)
    st = is_closed_surface(K)
    if st is None:
        raise NotASurface("quotient complex is not a closed surface")
    periods = tuple(G.element_order(c) for c in gv.elliptic)
    data = BranchingData(st.genus, G.order, periods)
    if args.expand:
        before = K.num_vertices
        K = expand_for_lift(K, branch)
        if K.num_vertices != before:
            warnings.append(f"expanded quotient by {K.num_vertices - before} vertices")
    res = lift_triangulation(K, data, gv, G, branch)
    out = res.to_json()
    out["data"] = data.to_json()
    out["quotient"] = K.to_json()
    return out


def _cmd_bound(args, warnings):
    kind = args.kind
    if kind == "genus":
        rep = estimates.genus_report(args.gamma)
    elif kind == "arithmetic":
        rep = estimates.arithmetic_report(args.degrees)
    elif kind == "projective":
        rep = estimates.projective_report(args.n)
    elif kind == "sphere-zpk":
        rep = estimates.sphere_zpk_report(args.d, args.m, args.n)
    elif kind == "cohom-sphere":
        rep = estimates.cohomology_sphere_bound(args.n, args.p, args.r)
    elif kind == "cyclic-join":
        value = estimates.cyclic_join_additivity(args.components)
        rep = estimates.BoundReport("ct_G", value, None, "cyclic-join",
                                    {"components": args.components})
    elif kind == "relative":
        rep = estimates.relative_sct_decomposition(args.ct_fixed, args.sct_relative)
    else:
        raise ParseError("bound needs a kind: genus, arithmetic, projective, "
                         "sphere-zpk, cohom-sphere, cyclic-join or relative")
    warnings.extend(rep.notes)
    return rep.to_json()


def _dispatch(args, loader, warnings):
    cmd = args.command
    if cmd in ("check-regular", "regularize", "quotient", "fvector", "ct-graph"):
        return _cmd_action(args, loader, warnings)
    if cmd == "gv-search":
        return _cmd_gv_search(args, loader, warnings)
    if cmd == "lift":
        return _cmd_lift(args, loader, warnings)
    if cmd == "jr":
        return {"n": jungerman_ringel(args.genus, args.orientable),
                "genus": args.genus, "orientable": args.orientable}
    if cmd == "rh":
        data = BranchingData(args.g_prime, args.order, tuple(args.periods))
        g = rh_genus(data)
        if g.denominator != 1 or g < 0:
            warnings.append("branching data is not arithmetically realisable")
        return {"g": _frac(g), "integral": g.denominator == 1, "data": data.to_json()}
    if cmd == "surface-bounds":
        data = BranchingData(args.g_prime, args.order, tuple(args.periods))
        return surface_orbit_bounds(data).to_json()
    return _cmd_bound(args, warnings)


def _flags(args) -> dict:
    skip = {"output", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit(report: dict, output: str | None) -> None:
    text = json.dumps(report, sort_keys=True, indent=2, default=str) + "\n"
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    command = next((a for a in argv if not a.startswith("-")), None)
    output = None
    loader = Loaded()
    try:
        if command is None:
            raise ParseError("no command given; expected one of " + ", ".join(COMMANDS))
        if command not in COMMANDS:
            raise UnknownCommand(f"unknown command {command!r}", command=command)
        args = build_parser().parse_args(argv)
        output = args.output
        warnings: list[str] = []
        result = _dispatch(args, loader, warnings)
        report = {"schema": SCHEMA, "command": command,
                  "inputs": {"files": loader.digests, "flags": _flags(args)},
                  "result": result, "warnings": warnings}
        _emit(report, output)
        return 0
    except GcoverError as exc:
        code = 2 if isinstance(exc, MALFORMED) else 1
        report = {"schema": SCHEMA, "command": command,
                  "inputs": {"files": loader.digests},
                  "error": {"type": type(exc).__name__, "message": str(exc),
                            "details": exc.details}}
        _emit(report, output)
        return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
