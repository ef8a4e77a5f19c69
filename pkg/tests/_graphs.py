"""Shared fixtures and independent oracles for the test-suite.

The oracles here deliberately avoid the package's own search code: they
enumerate raw edge subsets and check them with networkx.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx

from graphfactors.graph import Multigraph


def from_nx(g) -> Multigraph:
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    return Multigraph.from_edges(g.number_of_nodes(), [(u, v) for u, v, *_ in g.edges])


def to_nx(G: Multigraph, S=None) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(G.n))
    ids = range(G.m) if S is None else S
    g.add_edges_from(G.edges[e] for e in ids)
    return g


def path(n: int) -> Multigraph:
    return Multigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Multigraph:
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Multigraph:
    return Multigraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


K3 = cycle(3)
C4 = cycle(4)
P3 = path(3)
K4 = Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
PRISM = Multigraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
K33 = from_nx(nx.complete_bipartite_graph(3, 3))
PETERSEN = from_nx(nx.petersen_graph())
MOBIUS_KANTOR = from_nx(nx.LCF_graph(16, [5, -5], 8))
CUBE = from_nx(nx.hypercube_graph(3))
BOWTIE = Multigraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def bridged_cubic() -> tuple[Multigraph, dict[str, int]]:
    """Square ``a b c d`` with chord ``bd``, and two bridges to K4-minus-an-edge gadgets.

    Cubic, 14 vertices, cut-edges ``a a1`` and ``c a2`` on a common path.
    """
    names = "a b c d a1 p1 q1 r1 s1 a2 p2 q2 r2 s2".split()
    ix = {name: i for i, name in enumerate(names)}
    E = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "d"), ("a", "a1"), ("c", "a2")]
    for t in "12":
        E += [(f"a{t}", f"p{t}"), (f"a{t}", f"q{t}"), (f"p{t}", f"r{t}"), (f"p{t}", f"s{t}"),
              (f"q{t}", f"r{t}"), (f"q{t}", f"s{t}"), (f"r{t}", f"s{t}")]
    return Multigraph.from_edges(14, [(ix[u], ix[v]) for u, v in E]), ix


# independent oracles

def degrees_of(G: Multigraph, S) -> list[int]:
    deg = [0] * G.n
    for e in S:
        u, v = G.edges[e]
        deg[u] += 1
        deg[v] += 1
    return deg


def raw_is_x_parity_factor(G: Multigraph, X, S) -> bool:
    X = set(X)
    return all(d >= 1 and d % 2 == (v in X) for v, d in enumerate(degrees_of(G, S)))


def raw_x_parity_factors(G: Multigraph, X):
    """Every X-parity factor, by plain enumeration of all 2^m subsets."""
    for r in range(G.m + 1):
        for S in itertools.combinations(range(G.m), r):
            if raw_is_x_parity_factor(G, X, S):
                yield frozenset(S)


def raw_has_x_parity_factor(G: Multigraph, X) -> bool:
    return next(raw_x_parity_factors(G, X), None) is not None


def nx_is_caterpillar(g: nx.Graph) -> bool:
    if g.number_of_nodes() < 2 or not nx.is_tree(g):
        return False
    inner = [v for v in g if g.degree(v) >= 2]
    core = g.subgraph(inner)
    return len(inner) == 0 or (nx.is_connected(core) and max(dict(core.degree).values(), default=0) <= 2)


def nx_is_caterpillar_factor(G: Multigraph, S, kind: str) -> bool:
    g = to_nx(G, S)
    if any(a == b for a, b in g.edges()) or g.number_of_edges() != nx.Graph(g).number_of_edges():
        return False
    g = nx.Graph(g)
    for comp in nx.connected_components(g):
        h = g.subgraph(comp)
        if not nx_is_caterpillar(h):
            return False
        for v in h:
            d = h.degree(v)
            if d >= 2 and d % 2 != (0 if kind == "even" else 1):
                return False
    return True


def raw_has_caterpillar_factor(G: Multigraph, kind: str) -> bool:
    want = 0 if kind == "even" else 1
    for r in range(G.m + 1):
        for S in itertools.combinations(range(G.m), r):
            d = degrees_of(G, S)
            # cheap necessary conditions before the networkx check
            if min(d, default=1) == 0 or any(x >= 2 and x % 2 != want for x in d):
                continue
            if nx_is_caterpillar_factor(G, S, kind):
                return True
    return False


# corpora

@lru_cache(maxsize=None)
def trees_up_to(n: int) -> tuple[Multigraph, ...]:
    out = [Multigraph(1, ())]
    for order in range(2, n + 1):
        out += [from_nx(t) for t in nx.nonisomorphic_trees(order)]
    return tuple(out)


@lru_cache(maxsize=None)
def connected_graphs_up_to(n: int) -> tuple[Multigraph, ...]:
    return tuple(from_nx(g) for g in nx.graph_atlas_g()
                 if 1 <= g.number_of_nodes() <= n and nx.is_connected(g))


def even_subsets(n: int):
    for r in range(0, n + 1, 2):
        yield from itertools.combinations(range(n), r)
