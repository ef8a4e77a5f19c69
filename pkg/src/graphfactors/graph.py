"""Multigraph substrate: storage, text format, connectivity, bridges, matchings.

Vertices are ``0..n-1``.  Edges are endpoint pairs kept in insertion order and
identified by their position in that order, so loops and parallel edges are
ordinary citizens.  Edge sets handed around the package are ``frozenset``s of
edge ids into a specific graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional

import numpy as np

EdgeSet = frozenset


class GraphFormatError(ValueError):
    """Raised for malformed graph text, with the offending line number."""

    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph; a loop adds 2 to the degree of its vertex."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        n = self.n
        if n < 0:
            raise ValueError("negative vertex count")
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Multigraph":
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> list[list[tuple[int, int]]]:
        """Per vertex, ``(edge id, other endpoint)`` in edge-id order; loops listed twice."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append((e, v))
            inc[v].append((e, u))
        return inc

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, 2)`` int64 array."""
        flat = np.fromiter(itertools.chain.from_iterable(self.edges), dtype=np.int64,
                           count=2 * len(self.edges))
        return flat.reshape(-1, 2)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            if u == v:
                return False
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_regular(self, r: int) -> bool:
        return all(d == r for d in self.degrees)

    def edge_index(self) -> dict[tuple[int, int], list[int]]:
        """Map each unordered endpoint pair ``(min, max)`` to its edge ids."""
        index: dict[tuple[int, int], list[int]] = {}
        for e, (u, v) in enumerate(self.edges):
            index.setdefault((min(u, v), max(u, v)), []).append(e)
        return index

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


def degrees_in(G: Multigraph, S: Iterable[int]) -> list[int]:
    """Degree of every vertex in the spanning subgraph with edge set ``S``."""
    deg = [0] * G.n
    edges = G.edges
    for e in S:
        u, v = edges[e]
        deg[u] += 1
        deg[v] += 1
    return deg


def check_edge_set(G: Multigraph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    for e in S:
        if not (isinstance(e, int) and 0 <= e < G.m):
            raise ValueError(f"edge id {e!r} is not an edge of the graph")
    return S


# ---------------------------------------------------------------------------
# text format


def parse_graph(text: str) -> Multigraph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` lines are comments."""
    lines = [
        (i, ln.strip())
        for i, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise GraphFormatError(1, "missing header 'n m'")
    lineno, header = lines[0]
    toks = header.split()
    if len(toks) != 2:
        raise GraphFormatError(lineno, f"header must be 'n m', got {header!r}")
    n, m = (_int_token(t, lineno) for t in toks)
    if n < 0 or m < 0:
        raise GraphFormatError(lineno, "negative count in header")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise GraphFormatError(where, f"header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, ln in body:
        toks = ln.split()
        if len(toks) != 2:
            raise GraphFormatError(lineno, f"edge line must be 'u v', got {ln!r}")
        u, v = (_int_token(t, lineno) for t in toks)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(lineno, f"endpoint {x} out of range 0..{n - 1}")
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(lineno, f"not an integer: {tok!r}") from None


def render_graph(G: Multigraph) -> str:
    out = [f"{G.n} {G.m}"]
    out.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# connectivity


@dataclass(frozen=True)
class ComponentPartition:
    label: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def orders(self) -> list[int]:
        return [len(b) for b in self.blocks]


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            ra, rb = rb, ra
        self.parent[ra] = rb
        return True


def components(G: Multigraph, restrict: Optional[Iterable[int]] = None) -> ComponentPartition:
    """Connected components, optionally of the spanning subgraph on ``restrict``.

    Blocks are numbered by their smallest vertex; isolated vertices are singletons.
    """
    dsu = _DSU(G.n)
    edge_ids = range(G.m) if restrict is None else restrict
    edges = G.edges
    for e in edge_ids:
        u, v = edges[e]
        dsu.union(u, v)
    label = [-1] * G.n
    blocks: list[list[int]] = []
    for v in range(G.n):
        r = dsu.find(v)
        if label[r] == -1:
            label[r] = len(blocks)
            blocks.append([])
        label[v] = label[r]
        blocks[label[v]].append(v)
    return ComponentPartition(tuple(label), tuple(tuple(b) for b in blocks))


def is_connected(G: Multigraph, restrict: Optional[Iterable[int]] = None) -> bool:
    return G.n <= 1 or len(components(G, restrict)) == 1


def is_tree(G: Multigraph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


def two_coloring(G: Multigraph) -> Optional[list[int]]:
    """A proper 2-coloring (0/1 per vertex), or None when G is not bipartite."""
    color = [-1] * G.n
    inc = G.incidence
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for _, w in inc[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def is_bipartite(G: Multigraph) -> bool:
    return two_coloring(G) is not None


def bfs_path(G: Multigraph, source: int, target: int,
             allowed: Optional[frozenset[int]] = None) -> list[int]:
    """Edge ids of a shortest source-target path (optionally inside ``allowed``)."""
    if source == target:
        return []
    via = {source: -1}
    frontier = [source]
    inc = G.incidence
    while frontier:
        nxt = []
        for v in frontier:
            for e, w in inc[v]:
                if w in via or (allowed is not None and e not in allowed):
                    continue
                via[w] = e
                if w == target:
                    path = []
                    x = w
                    while x != source:
                        e = via[x]
                        path.append(e)
                        x = G.other(e, x)
                    path.reverse()
                    return path
                nxt.append(w)
        frontier = nxt
    raise ValueError(f"no path between {source} and {target}")


# ---------------------------------------------------------------------------
# bridges


def bridges(G: Multigraph) -> frozenset[int]:
    """Cut-edges, by one iterative lowpoint pass.

    The DFS skips only the tree edge it arrived by (by id), so a parallel copy
    counts as a back edge and a doubled edge is never reported.
    """
    n = G.n
    inc = G.incidence
    disc = [-1] * n
    low = [0] * n
    found = []
    clock = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = clock
        clock += 1
        stack = [(s, -1, iter(inc[s]))]
        while stack:
            v, via, it = stack[-1]
            descended = False
            for e, w in it:
                if e == via:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(inc[w])))
                    descended = True
                    break
                if disc[w] < low[v]:
                    low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] > disc[u]:
                    found.append(via)
    return frozenset(found)


def cut_edges_on_path(G: Multigraph) -> bool:
    """Whether some path of G contains every cut-edge.

    Contracting the 2-edge-connected pieces gives the bridge tree, whose edges
    are exactly the bridges; they all lie on one path iff that tree is a path.
    A path can always cross a 2-edge-connected piece between any two of its
    vertices, so this agrees with paths of G itself.
    """
    if not is_connected(G):
        raise ValueError("cut_edges_on_path needs a connected graph")
    cut = bridges(G)
    if not cut:
        return True
    pieces = components(G, [e for e in range(G.m) if e not in cut])
    load = [0] * len(pieces)
    for e in cut:
        u, v = G.edges[e]
        load[pieces.label[u]] += 1
        load[pieces.label[v]] += 1
    return max(load) <= 2


# ---------------------------------------------------------------------------
# matchings and 2-factors


def iter_perfect_matchings(G: Multigraph) -> Iterator[frozenset[int]]:
    """Perfect matchings in canonical order, one per set of matched vertex pairs.

    Depth-first: the lowest unmatched vertex is matched to each free neighbour
    in increasing id order (first edge id among parallels); states that
    produced nothing are memoised.  Loops are never used.
    """
    n = G.n
    if n % 2:
        return
    nbrs = []
    for v in range(n):
        first: dict[int, int] = {}
        for e, w in G.incidence[v]:
            if w != v and w not in first:
                first[w] = e
        nbrs.append(sorted(first.items()))
    full = (1 << n) - 1
    failed: set[int] = set()

    def extend(mask: int) -> Iterator[tuple[int, ...]]:
        if mask == full:
            yield ()
            return
        if mask in failed:
            return
        v = (~mask & (mask + 1)).bit_length() - 1
        produced = False
        for w, e in nbrs[v]:
            if not (mask >> w) & 1:
                for rest in extend(mask | (1 << v) | (1 << w)):
                    produced = True
                    yield (e,) + rest
        if not produced:
            failed.add(mask)

    for combo in extend(0):
        yield frozenset(combo)


def perfect_matching(G: Multigraph) -> Optional[frozenset[int]]:
    return next(iter_perfect_matchings(G), None)


def is_perfect_matching(G: Multigraph, M: Iterable[int]) -> bool:
    M = list(M)
    hit = [0] * G.n
    for e in M:
        u, v = G.edges[e]
        if u == v:
            return False
        hit[u] += 1
        hit[v] += 1
    return all(h == 1 for h in hit)


class Cycle(NamedTuple):
    """Closed walk: ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]`` (cyclically)."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def two_factor_cycles(G: Multigraph, M: Iterable[int]) -> list[Cycle]:
    """Components of ``G - M`` for a 3-regular G and perfect matching M.

    Each is traced from its smallest vertex along the lowest unused edge id.
    Loops come back as 1-cycles and parallel pairs as 2-cycles.
    """
    M = frozenset(M)
    if not G.is_regular(3):
        raise ValueError("two_factor_cycles needs a 3-regular graph")
    if not is_perfect_matching(G, M):
        raise ValueError("M is not a perfect matching of G")
    rest = [[(e, w) for e, w in G.incidence[v] if e not in M] for v in range(G.n)]
    used: set[int] = set()
    seen = [False] * G.n
    cycles = []
    for s in range(G.n):
        if seen[s]:
            continue
        verts, eds = [s], []
        v = s
        seen[s] = True
        while True:
            e, w = next((e, w) for e, w in rest[v] if e not in used)
            used.add(e)
            eds.append(e)
            if w == s:
                break
            verts.append(w)
            seen[w] = True
            v = w
        cycles.append(Cycle(tuple(verts), tuple(eds)))
    return cycles
