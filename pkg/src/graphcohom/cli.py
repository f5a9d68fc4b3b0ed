"""Command-line front end: ``graphcohom <subcommand> ...``.

Graph inputs are JSON files in the format written by ``gen``; a path of
``-`` (or no path) reads standard input, so commands compose in pipes.
Exit codes: 0 success, 1 a verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .cohomology import module_generators
from .exact import rat, rat_str
from .fixtures import fixture_corpus
from .graph import (
    GraphError,
    RandomSpec,
    cartesian_product,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    find_product_scalars,
    from_json,
    path_graph,
    random_general_position,
)
from .profile import betti_generic, char_profile, dim_Hk, ordering_indices, r_k, s_k
from .structure import edge_connectivity, trim_with_trace, vertex_connectivity
from .verify import exit_code, run_suite


class UsageError(Exception):
    pass


def _read_graph(path: str | None, args):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    G = from_json(text, allow_unchecked=args.slopes_unchecked)
    return G


def _emit(payload: dict, table_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(table_lines))


def _seq(xs) -> str:
    return " ".join(str(x) for x in xs)


def _parse_ordering(text: str | None):
    if not text:
        return None
    try:
        return [int(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad --ordering {text!r}") from None


def _parse_xi(text: str | None):
    if not text:
        return None
    parts = text.replace(",", " ").split()
    if len(parts) != 2:
        raise UsageError("--xi needs two rationals, e.g. --xi 1,3")
    return (rat(parts[0]), rat(parts[1]))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    G = _read_graph(args.graph, args)
    prof = char_profile(G)
    top = prof.K + 1 if args.k is None else args.k
    dims = [dim_Hk(G, k) for k in range(top + 1)]
    payload = {"m": G.m, "n_edges": G.n_edges, "profile": prof.to_dict(), "dim_H": dims}
    lines = [
        f"m = {G.m}   |E| = {G.n_edges}   pi0 = {prof.pi0}   K = {prof.K}",
        f"r   : {_seq(prof.r)}",
        f"s   : {_seq(prof.s)}",
        f"c   : {_seq(prof.c)}",
        f"dimH: {_seq(dims)}  (k = 0..{top})",
    ]
    if args.k is not None:
        payload["at_k"] = {"k": args.k, "r": r_k(G, args.k), "s": s_k(G, args.k), "dim_H": dims[-1]}
        lines.append(f"k = {args.k}: r = {r_k(G, args.k)}  s = {s_k(G, args.k)}  dimH = {dims[-1]}")
    if G.phi is not None:
        betti = betti_generic(G, _parse_xi(args.xi))
        payload["betti"] = betti.to_dict()
        lines.append(f"beta: {_seq(betti.beta)}  (xi = {rat_str(betti.xi[0])},{rat_str(betti.xi[1])})")
        if not betti.xi_invariant:
            lines.append("      (graph not regular: beta may depend on xi)")
    elif args.xi:
        raise UsageError("--xi needs a graph with coordinates")
    od = ordering_indices(G, _parse_ordering(args.ordering))
    payload["ordering"] = od.to_dict()
    lines.append(f"mu  : {_seq(od.mu)}")
    lines.append(f"b   : {_seq(od.b)}")
    _emit(payload, lines, args.format)
    return 0


def cmd_generators(args) -> int:
    G = _read_graph(args.graph, args)
    gens = module_generators(G)
    payload = {"counts": list(gens.counts()), "generators": gens.to_json()}
    lines = [f"counts: {_seq(gens.counts())}"]
    for d, g in gens.generators:
        lines.append(f"[deg {d}] " + " | ".join(g.to_json()))
    _emit(payload, lines, args.format)
    return 0


def cmd_product(args) -> int:
    G1 = _read_graph(args.graph1, args)
    G2 = _read_graph(args.graph2, args)
    if (args.a is None) != (args.b is None):
        raise UsageError("give both --a and --b, or neither")
    if args.a is None:
        a, b = find_product_scalars(G1, G2)
    else:
        a, b = rat(args.a), rat(args.b)
    print(cartesian_product(G1, G2, a, b).to_json())
    return 0


def cmd_trim(args) -> int:
    if args.k is None or args.k < 1:
        raise UsageError("trim needs --k >= 1")
    G = _read_graph(args.graph, args)
    H, steps = trim_with_trace(G, args.k)
    if args.format == "table":
        for st in steps:
            print(f"# remove {st.action}: {list(st.removed)}", file=sys.stderr)
    print(H.to_json())
    return 0


def cmd_connectivity(args) -> int:
    G = _read_graph(args.graph, args)
    if G.m < 2:
        raise UsageError("connectivity needs at least two vertices")
    lam, ecut = edge_connectivity(G)
    kappa, vcut = vertex_connectivity(G)
    payload = {
        "edge_connectivity": lam,
        "edge_cut": ecut.to_dict(),
        "vertex_connectivity": kappa,
        "vertex_cut": vcut.to_dict() if vcut else None,
    }
    lines = [
        f"edge connectivity   {lam}   cut {[list(e) for e in ecut.items]}",
        f"vertex connectivity {kappa}   " + (f"cut {list(vcut.items)}" if vcut else "(complete graph)"),
    ]
    _emit(payload, lines, args.format)
    return 0


def cmd_verify(args) -> int:
    corpus = "default" if args.default or not args.corpus else args.corpus
    reports = []
    try:
        for rep in run_suite(corpus, args.seed):
            reports.append(rep)
            print(rep.to_json(), flush=True)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return exit_code(reports)


def cmd_gen(args) -> int:
    start = args.start
    if args.complete is not None:
        G = complete_graph(args.complete, start)
    elif args.cycle is not None:
        G = cycle_graph(args.cycle, start)
    elif args.path is not None:
        G = path_graph(args.path, start)
    elif args.edgeless is not None:
        G = edgeless_graph(args.edgeless, start)
    elif args.fixture is not None:
        table = dict(fixture_corpus())
        if args.fixture not in table:
            raise UsageError(f"unknown fixture {args.fixture!r}; known: {', '.join(table)}")
        G = table[args.fixture]
    elif args.random is not None:
        spec = RandomSpec(args.random, args.mode, args.density, args.degree)
        G = random_general_position(spec, args.seed)
    else:
        raise UsageError("gen needs one of --complete/--cycle/--path/--edgeless/--fixture/--random")
    print(G.to_json())
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--slopes-unchecked", action="store_true",
                        help="accept graphs given by edge slopes only")

    p = argparse.ArgumentParser(prog="graphcohom", description="Exact invariants of embedded graphs.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="r, s, c, Betti and ordering indices")
    a.add_argument("graph", nargs="?")
    a.add_argument("--k", type=int)
    a.add_argument("--xi", help="generic direction, e.g. 1,3")
    a.add_argument("--ordering", help="vertex order, e.g. 3,1,2,4")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generators", parents=[common], help="homogeneous module generators")
    g.add_argument("graph", nargs="?")
    g.set_defaults(func=cmd_generators)

    pr = sub.add_parser("product", parents=[common], help="Cartesian product graph")
    pr.add_argument("graph1")
    pr.add_argument("graph2")
    pr.add_argument("--a")
    pr.add_argument("--b")
    pr.set_defaults(func=cmd_product)

    t = sub.add_parser("trim", parents=[common], help="maximal k-trimmed subgraph")
    t.add_argument("graph", nargs="?")
    t.add_argument("--k", type=int)
    t.set_defaults(func=cmd_trim)

    c = sub.add_parser("connectivity", parents=[common], help="minimum edge and vertex cuts")
    c.add_argument("graph", nargs="?")
    c.set_defaults(func=cmd_connectivity)

    v = sub.add_parser("verify", help="run the verification suite (JSON lines)")
    v.add_argument("--default", action="store_true")
    v.add_argument("--corpus", help="default | fixtures | random | complete:N | empty")
    v.add_argument("--seed", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="write a graph file")
    src = gen.add_mutually_exclusive_group()
    src.add_argument("--complete", type=int)
    src.add_argument("--cycle", type=int)
    src.add_argument("--path", type=int)
    src.add_argument("--edgeless", type=int)
    src.add_argument("--fixture")
    src.add_argument("--random", type=int, metavar="M")
    gen.add_argument("--start", type=int, default=1, help="first moment-curve parameter")
    gen.add_argument("--mode", choices=("er", "regular"), default="er")
    gen.add_argument("--density", type=float, default=0.5)
    gen.add_argument("--degree", type=int, default=3)
    gen.add_argument("--seed", type=int, default=1)
    gen.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
