"""Command-line entry point.

Decision subcommands print ``YES`` or ``NO`` on the first line and, after
``YES``, the sorted edge ids of the certificate on the second.  Exit status
is 0 for YES, 1 for NO and 2 for any error.  ``reduce`` and ``gen`` print an
instance instead and exit 0.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from . import caterpillar, cnf, ecf, ocf, oracle, parity, parity_factor, reductions
from .graph import Multigraph, is_tree, parse_graph, render_graph
from .trees import NotATreeError


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(",", " ").split()]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _graph(path: str) -> Multigraph:
    return parse_graph(_read(path))


def _yes(out: TextIO, edges) -> int:
    out.write("YES\n" + " ".join(str(e) for e in sorted(edges)) + "\n")
    return 0


def _answer(out: TextIO, edges) -> int:
    if edges is None:
        out.write("NO\n")
        return 1
    return _yes(out, edges)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graphfactors", description="Parity factors and caterpillar factors of multigraphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("parity-join", help="spanning subgraph with odd degree exactly on a vertex set")
    s.add_argument("graph")
    s.add_argument("--odd", type=_int_list, default=[])
    s.add_argument("--minimize", action="store_true")

    s = sub.add_parser("parity-factor", help="X-parity factor (all degrees positive)")
    s.add_argument("graph")
    s.add_argument("--odd", type=_int_list, default=[])
    s.add_argument("--method", choices=parity_factor.METHODS, default="auto")
    s.add_argument("--max-edges", type=int, default=30)

    s = sub.add_parser("spp-check", help="exhaustive strong parity property check")
    s.add_argument("graph")
    s.add_argument("--max-n", type=int, default=14)

    for name in ("ecf", "ocf"):
        s = sub.add_parser(name, help=f"{'even' if name == 'ecf' else 'odd'} caterpillar factor")
        s.add_argument("graph")
        how = s.add_mutually_exclusive_group()
        how.add_argument("--tree", action="store_true", help="linear-time tree algorithm")
        how.add_argument("--brute", action="store_true", help="exhaustive search")
        s.add_argument("--max-edges", type=int, default=40)

    s = sub.add_parser("reduce", help="gadget graph for a 3-CNF formula")
    s.add_argument("cnf")
    s.add_argument("--target", choices=("ecf", "ocf"), required=True)
    s.add_argument("--names", metavar="OUT", help="write 'name id' lines to this file")

    s = sub.add_parser("verify", help="check a certificate")
    s.add_argument("graph")
    s.add_argument("--edges", type=_int_list, required=True)
    s.add_argument("--kind", choices=("xparity", "even", "odd"), required=True)
    s.add_argument("--odd", type=_int_list, default=[])

    s = sub.add_parser("gen", help="seeded random instance")
    s.add_argument("--kind", choices=("tree", "cubic", "cnf", "multigraph"), required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--l", type=int)
    s.add_argument("--no-loops", action="store_true")
    s.add_argument("--no-parallel", action="store_true")
    s.add_argument("--multi", action="store_true", help="cubic: allow parallel edges")
    return p


def _caterpillar(args, out: TextIO, kind: str) -> int:
    G = _graph(args.graph)
    use_tree = args.tree or (not args.brute and G.n >= 1 and is_tree(G))
    if use_tree:
        if kind == "even":
            return _answer(out, ecf.ecf_tree_solve(G))
        return _answer(out, ocf.ocf_tree_solve(G))
    return _answer(out, oracle.brute_caterpillar_factor(G, kind, max_edges=args.max_edges))


def _dispatch(args, out: TextIO) -> int:
    cmd = args.command
    if cmd == "parity-join":
        G = _graph(args.graph)
        H = parity.parity_spanning_subgraph(G, args.odd)
        if args.minimize:
            H = parity.local_minimize(G, args.odd, H)
        return _yes(out, H)
    if cmd == "parity-factor":
        G = _graph(args.graph)
        return _answer(out, parity_factor.x_parity_factor(G, args.odd, args.method, args.max_edges))
    if cmd == "spp-check":
        G = _graph(args.graph)
        bad = parity_factor.spp_counterexample(G, args.max_n)
        if bad is None:
            out.write("YES\n\n")
            return 0
        out.write("NO\n" + " ".join(str(v) for v in sorted(bad)) + "\n")
        return 1
    if cmd == "ecf":
        return _caterpillar(args, out, "even")
    if cmd == "ocf":
        return _caterpillar(args, out, "odd")
    if cmd == "reduce":
        F = cnf.parse_dimacs(_read(args.cnf), require_distinct=True)
        build = reductions.build_gf_star if args.target == "ecf" else reductions.build_hf_star
        G, gm = build(F)
        out.write(render_graph(G))
        if args.names:
            with open(args.names, "w", encoding="utf-8") as fh:
                fh.write(reductions.render_name_map(gm))
        return 0
    if cmd == "verify":
        G = _graph(args.graph)
        if args.kind == "xparity":
            ok = parity_factor.is_x_parity_factor(G, args.odd, args.edges)
        else:
            ok = caterpillar.caterpillar_defect(G, args.edges, args.kind) is None
        return _answer(out, args.edges if ok else None)
    if cmd == "gen":
        params = {k: v for k, v in (("n", args.n), ("m", args.m), ("k", args.k), ("l", args.l)) if v is not None}
        if args.kind == "multigraph":
            params.update(loops=not args.no_loops, parallel=not args.no_parallel)
        if args.kind == "cubic":
            params["simple"] = not args.multi
        inst = oracle.generate(args.kind, args.seed, **params)
        out.write(cnf.render_dimacs(inst) if args.kind == "cnf" else render_graph(inst))
        return 0
    raise _UsageError(f"unknown command {cmd!r}")


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        return _dispatch(args, out)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
    except (ValueError, RuntimeError, OSError, NotATreeError) as exc:
        err.write(f"error: {exc}\n")
    except AssertionError as exc:
        err.write(f"internal error: {exc}\n")
    return 2


def main() -> None:
    sys.exit(run())
