"""Caterpillars, their even/odd type, and the caterpillar-factor verifier.

A caterpillar is a tree with at least one edge whose vertices of degree >= 2
induce a path (the spine).  It is even (odd) when every vertex of degree >= 2
has even (odd) degree; K2 has no such vertex and so counts as both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .graph import Multigraph, check_edge_set, is_tree

Kind = Literal["even", "odd"]

UNCOVERED = "uncovered-vertex"
NOT_CATERPILLAR = "non-caterpillar-component"
PARITY = "parity-violation"
K2_COMPONENT = "k2-component"


@dataclass(frozen=True)
class Caterpillar:
    vertices: tuple[int, ...]
    edges: frozenset[int]
    spine: tuple[int, ...]
    leaves: dict[int, int] = field(hash=False)  # leaf -> spine vertex it hangs from

    @property
    def order(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CaterpillarDecomposition:
    kind: str
    components: tuple[Caterpillar, ...]

    def __len__(self) -> int:
        return len(self.components)


def _spine(vertices: Iterable[int], adj: dict[int, list[int]] | list[list[int]]) -> Optional[tuple[int, ...]]:
    """Spine of a tree given by adjacency, or None if the inner vertices do not form a path."""
    vertices = list(vertices)
    inner = {v for v in vertices if len(adj[v]) >= 2}
    if not inner:
        return (min(vertices),)
    inner_nbrs = {v: [w for w in adj[v] if w in inner] for v in inner}
    if any(len(ws) > 2 for ws in inner_nbrs.values()):
        return None
    start = min(v for v, ws in inner_nbrs.items() if len(ws) <= 1)
    spine = [start]
    prev = -1
    while True:
        nxt = [w for w in inner_nbrs[spine[-1]] if w != prev]
        if not nxt:
            break
        prev = spine[-1]
        spine.append(nxt[0])
    return tuple(spine)


def is_caterpillar(G: Multigraph) -> Optional[tuple[int, ...]]:
    """The spine of G if G is a caterpillar, else None.

    For K2 the spine is the smaller vertex.  Raises ValueError on loops or
    parallel edges, since caterpillars are simple graphs.
    """
    if not G.is_simple():
        raise ValueError("caterpillars are defined on simple graphs")
    if G.n < 2 or not is_tree(G):
        return None
    adj = [[w for _, w in G.incidence[v]] for v in range(G.n)]
    return _spine(range(G.n), adj)


def classify_caterpillar(G: Multigraph) -> str:
    """One of ``"both"``, ``"even"``, ``"odd"``, ``"neither"``."""
    if is_caterpillar(G) is None:
        raise ValueError("not a caterpillar")
    inner = [d for d in G.degrees if d >= 2]
    if not inner:
        return "both"
    if all(d % 2 == 0 for d in inner):
        return "even"
    if all(d % 2 == 1 for d in inner):
        return "odd"
    return "neither"


def caterpillar_defect(G: Multigraph, S: Iterable[int], kind: Kind,
                       strongly_even: bool = False) -> Optional[str]:
    """Why S is not a ``kind`` caterpillar factor of G, or None if it is.

    Reasons, checked in this order: ``uncovered-vertex``,
    ``non-caterpillar-component``, ``parity-violation`` and, with
    ``strongly_even``, ``k2-component``.
    """
    if kind not in ("even", "odd"):
        raise ValueError(f"kind must be 'even' or 'odd', not {kind!r}")
    n = G.n
    ids = np.fromiter(S, dtype=np.int64)
    ids = np.unique(ids)
    if len(ids) and (ids[0] < 0 or ids[-1] >= G.m):
        raise ValueError("edge id out of range")
    E = G.edge_array[ids]
    deg = np.bincount(E.ravel(), minlength=n)
    if n == 0:
        return None
    if (deg == 0).any():
        return UNCOVERED
    A = sp.csr_matrix((np.ones(len(E), dtype=np.int8), (E[:, 0], E[:, 1])), shape=(n, n))
    ncomp, comp = connected_components(A, directed=False)
    sizes = np.bincount(comp, minlength=ncomp)
    edge_count = np.bincount(comp[E[:, 0]], minlength=ncomp)
    if (edge_count != sizes - 1).any():
        return NOT_CATERPILLAR
    inner = deg >= 2
    both = inner[E[:, 0]] & inner[E[:, 1]]
    inner_deg = np.bincount(E[both].ravel(), minlength=n)
    if (inner_deg > 2).any():
        return NOT_CATERPILLAR
    if kind == "odd":
        if (deg % 2 == 0).any():
            return PARITY
    elif (inner & (deg % 2 == 1)).any():
        return PARITY
    if strongly_even and (sizes == 2).any():
        return K2_COMPONENT
    return None


def verify_caterpillar_factor(G: Multigraph, S: Iterable[int], kind: Kind,
                              strongly_even: bool = False) -> Optional[CaterpillarDecomposition]:
    """Decompose S into caterpillars of the requested kind, or return None.

    K2 components are accepted for both kinds unless ``strongly_even`` is set.
    Use :func:`caterpillar_defect` to learn why a set was rejected.
    """
    S = check_edge_set(G, S)
    if caterpillar_defect(G, S, kind, strongly_even) is not None:
        return None
    adj: dict[int, list[int]] = {v: [] for v in range(G.n)}
    owned: dict[int, list[int]] = {}
    for e in S:
        u, v = G.edges[e]
        adj[u].append(v)
        adj[v].append(u)
    blocks = _blocks(G.n, adj)
    label = {v: i for i, b in enumerate(blocks) for v in b}
    for e in S:
        owned.setdefault(label[G.edges[e][0]], []).append(e)
    parts = []
    for i, block in enumerate(blocks):
        spine = _spine(block, adj)
        on_spine = set(spine)
        leaves = {v: adj[v][0] for v in block if v not in on_spine}
        parts.append(Caterpillar(tuple(block), frozenset(owned[i]), spine, leaves))
    return CaterpillarDecomposition(kind, tuple(parts))


def _blocks(n: int, adj: dict[int, list[int]]) -> list[list[int]]:
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        block, stack = [], [s]
        while stack:
            v = stack.pop()
            block.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(block))
    return out
