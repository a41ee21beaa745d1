"""Command-line interface: ``design-spectra <command> ...``.

All results go to stdout as JSON with a stable key order; diagnostics go
to stderr.  The exit status is 0 iff every requested check passed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formulas
from .design import DesignParams, NotDesignGraph, check_design, param_identity
from .generators import (bipartite_kneser, complete_graph, cycle_graph, double_cover, rook_graph,
                         subspace_graph)
from .graph import GraphError, bipartition, distance_matrix, read_edge_list, write_edge_list
from .partitions import (PartitionError, Partition, coarsest_equitable_refinement,
                         part_partition, pi2_partition, quotient_matrix)
from .pipeline import SizeLimitError, max_order, verify_subspace
from .spectra import (char_poly_exact, exact_spectrum, integer_roots, numeric_spectrum,
                      spectrum_to_json, value_to_json)


def _emit(obj, pretty: bool = False) -> None:
    print(json.dumps(obj, indent=2 if pretty else None, ensure_ascii=False))


def _fail(msg: str, code: int = 1) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _build(family: str, args) -> object:
    if family == "kneser":
        return bipartite_kneser(_need(args.n, "--n"))
    if family == "subspace":
        return subspace_graph(_need(args.q, "--q"), _need(args.n, "--n"))
    if family == "rook":
        return rook_graph(_need(args.s, "--s"))
    if family == "complete":
        return complete_graph(_need(args.n, "--n"))
    if family == "cycle":
        return cycle_graph(_need(args.n, "--n"))
    raise ValueError(f"unknown family {family!r}")


def _need(value, name):
    if value is None:
        raise ValueError(f"{name} is required for this family")
    return value


def cmd_gen(args) -> int:
    if args.family == "double-cover":
        base = read_edge_list(args.input) if args.input else _build(args.base, args)
        g = double_cover(base)
    else:
        g = _build(args.family, args)
    write_edge_list(g, args.out)
    _emit({"out": args.out, "n": g.n, "edges": g.num_edges}, args.pretty)
    return 0


def cmd_check(args) -> int:
    g = read_edge_list(args.input)
    try:
        p = check_design(g)
    except NotDesignGraph as exc:
        _emit({"is_design": False, "reason": exc.reason}, args.pretty)
        return 1
    _emit({"is_design": True, "m": p.m, "d": p.d, "c": p.c}, args.pretty)
    return 0


def cmd_spectrum(args) -> int:
    g = read_edge_list(args.input)
    dm = distance_matrix(g)
    numeric = numeric_spectrum(dm, args.tol, method=args.method)
    poly = char_poly_exact(dm)
    integral = sum(integer_roots(poly)[0].values()) == g.n
    exact = exact_spectrum(poly, numeric.values)
    # unresolved residual factors: fall back to the numeric values
    source = numeric if exact.residual is not None else exact
    out = spectrum_to_json(source, args.tol * 3, integral)
    if args.exact:
        out["char_poly"] = list(poly.coeffs)
        if exact.residual is not None:
            out["residual"] = list(exact.residual.coeffs)
    if args.pretty:
        for v, k in zip(out["distinct"], out["multiplicities"]):
            print(f"{_fmt_value(v):>24}  x{k}")
        print(f"integral: {out['integral']}")
        return 0
    _emit(out)
    return 0


def _fmt_value(v: dict) -> str:
    if v["kind"] == "quad":
        body = f"{v['a']} {'+' if v['b'] > 0 else '-'} {abs(v['b'])}*sqrt({v['s']})"
        return f"({body})/{v['t']}" if v["t"] != 1 else body
    return str(v["v"])


def cmd_quotient(args) -> int:
    g = read_edge_list(args.input)
    dm = distance_matrix(g)
    if args.partition == "refine":
        seed = Partition.of([range(g.n)]) if args.seed_vertex is None else Partition.of(
            [[args.seed_vertex], [v for v in range(g.n) if v != args.seed_vertex]])
        part = coarsest_equitable_refinement(dm, seed)
    else:
        bip = bipartition(g)
        part = (part_partition(bip) if args.partition == "parts"
                else pi2_partition(g, bip, args.seed_vertex))
    q = quotient_matrix(dm, part)
    _emit({"cells": [list(c) for c in part.cells], "quotient": q.as_list()}, args.pretty)
    return 0


def cmd_formulas(args) -> int:
    out: dict = {}
    if args.q is not None:
        if args.n is None:
            raise ValueError("--n is required with --q")
        p = formulas.s_parameters(args.q, args.n)
        spec = formulas.s_spectrum(args.q, args.n)
        integral = formulas.s_is_integral(args.q, args.n)
        out["graph"] = {"family": "subspace", "q": args.q, "n": args.n, "order": 2 * p.m}
        out["gaussian_binomial_n_1"] = formulas.gaussian_binomial(args.n, 1, args.q)
    else:
        if None in (args.m, args.d, args.c):
            raise ValueError("give either --q/--n or all of --m/--d/--c")
        p = DesignParams(args.m, args.d, args.c)
        spec = integral = None
    g1, g2 = formulas.gamma_pair(p)
    out["design"] = {"m": p.m, "d": p.d, "c": p.c, "identity_holds": param_identity(p)}
    out["gamma"] = [g1, g2]
    out["part_quotient"] = formulas.part_quotient(p)
    out["quotient_P"] = formulas.quotient_P(p)
    if spec is not None:
        out["s_spectrum"] = [value_to_json(v) for v in spec]
        out["integral"] = integral
        out["even_n"] = formulas.even_n_condition(args.n)
        if integral and not out["even_n"]:
            out["note"] = "integral with odd n: even n is sufficient, not necessary"
    _emit(out, args.pretty)
    return 0


def cmd_verify(args) -> int:
    if args.family != "subspace":
        raise ValueError("verify supports --family subspace")
    report = verify_subspace(args.q, args.n, args.tol, args.seed_vertex,
                             args.max_n if args.max_n is not None else max_order(),
                             args.all_bases)
    if args.pretty:
        print(f"S({args.q},{args.n},1): order {report.graph['order']}, "
              f"design {report.design.as_tuple()}")
        for name, ok in report.flags.items():
            print(f"  {'PASS' if ok else 'FAIL'}  {name}")
        print("  distinct: " + ", ".join(_fmt_value(v) for v in report.spectrum["distinct"]))
        print(f"  integral: {report.integrality['integral']}")
        if "note" in report.integrality:
            print(f"  note: {report.integrality['note']}")
    else:
        _emit(report.to_json(timing=args.timing))
    if args.timing:
        for k, v in report.timing.items():
            print(f"timing {k}: {v:.3f}s", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="design-spectra",
                                 description="Distance spectra of design graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--pretty", action="store_true", help="human-readable output")
        return p

    p = common(sub.add_parser("gen", help="write a graph as an edge list"))
    p.add_argument("--family", required=True,
                   choices=["kneser", "subspace", "rook", "double-cover", "complete", "cycle"])
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--base", choices=["kneser", "subspace", "rook", "complete", "cycle"],
                   help="base family for double-cover")
    p.add_argument("--in", dest="input", help="base graph file for double-cover")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = common(sub.add_parser("check", help="design-graph test"))
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = common(sub.add_parser("spectrum", help="distance spectrum"))
    p.add_argument("input")
    p.add_argument("--exact", action="store_true", help="also print the characteristic polynomial")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--method", choices=["eigh", "jacobi"], default="eigh")
    p.set_defaults(func=cmd_spectrum)

    p = common(sub.add_parser("quotient", help="partition cells and quotient matrix"))
    p.add_argument("input")
    p.add_argument("--partition", choices=["pi2", "parts", "refine"], default="pi2")
    p.add_argument("--seed-vertex", type=int)
    p.set_defaults(func=cmd_quotient)

    p = common(sub.add_parser("formulas", help="closed forms for (q, n) or (m, d, c)"))
    for name in ("q", "n", "m", "d", "c"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_formulas)

    p = common(sub.add_parser("verify", help="end-to-end check of S(q, n, 1)"))
    p.add_argument("--family", default="subspace", choices=["subspace"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--seed-vertex", type=int)
    p.add_argument("--all-bases", action="store_true",
                   help="check the four-cell partition for every base vertex")
    p.add_argument("--max-n", type=int, help="vertex cap (default $DESIGN_SPECTRA_MAX_N or 4096)")
    p.add_argument("--timing", action="store_true", help="include stage timings")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, PartitionError, SizeLimitError, ValueError, OSError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
