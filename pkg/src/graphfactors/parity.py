"""Spanning subgraphs with prescribed degree parities (T-join style).

A parity target is a vertex set X of even size: vertices in X must get odd
degree, all others even degree.  Degree 0 is allowed here; the factor
versions (every degree positive) live in :mod:`graphfactors.parity_factor`.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .graph import Multigraph, bfs_path, check_edge_set, degrees_in, is_connected

# full simple-cycle enumeration in local_minimize is used up to this order
FULL_CYCLE_BOUND = 8


def parity_target(G: Multigraph, X: Iterable[int]) -> frozenset[int]:
    """Validate and freeze a parity target."""
    X = frozenset(X)
    for v in X:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} is not in the graph")
    if len(X) % 2:
        raise ValueError(f"|X| = {len(X)} is odd; a parity target needs an even number of vertices")
    return X


def has_parity(G: Multigraph, X: Iterable[int], H: Iterable[int]) -> bool:
    """Degrees in H are odd exactly on X."""
    X = frozenset(X)
    deg = degrees_in(G, H)
    return all((deg[v] % 2 == 1) == (v in X) for v in range(G.n))


def dfs_order(G: Multigraph, allowed: Optional[frozenset[int]] = None) -> list[int]:
    """Preorder of a depth-first search from vertex 0 (restarting on later roots)."""
    seen = [False] * G.n
    order = []
    inc = G.incidence
    for root in range(G.n):
        if seen[root]:
            continue
        stack = [root]
        while stack:
            v = stack.pop()
            if seen[v]:
                continue
            seen[v] = True
            order.append(v)
            for e, w in reversed(inc[v]):
                if not seen[w] and (allowed is None or e in allowed):
                    stack.append(w)
    return order


def parity_spanning_subgraph(G: Multigraph, X: Iterable[int],
                             within: Optional[Iterable[int]] = None) -> frozenset[int]:
    """Edges with odd degree exactly on X: XOR of paths joining X in pairs.

    X is paired in depth-first discovery order and each pair is joined by a
    BFS shortest path; an edge is kept iff an odd number of paths use it.
    With ``within`` the construction runs inside that spanning edge set.
    """
    X = parity_target(G, X)
    allowed = None if within is None else check_edge_set(G, within)
    if not is_connected(G, allowed):
        raise ValueError("parity_spanning_subgraph needs a connected (sub)graph")
    ordered = [v for v in dfs_order(G, allowed) if v in X]
    H: set[int] = set()
    for a, b in zip(ordered[::2], ordered[1::2]):
        H.symmetric_difference_update(bfs_path(G, a, b, allowed))
    return frozenset(H)


def enumerate_cycles(G: Multigraph, max_length: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Every cycle of G once, as a tuple of edge ids.

    Loops are 1-cycles and parallel pairs 2-cycles.  Longer cycles are rooted
    at their smallest vertex and emitted in the orientation whose opening edge
    id is smaller than its closing edge id.
    """
    if max_length is not None and max_length < 1:
        return
    for e, (u, v) in enumerate(G.edges):
        if u == v:
            yield (e,)
    inc = G.incidence
    limit = G.n if max_length is None else max_length
    on_path = [False] * G.n

    def walk(s: int, v: int, path: list[int]) -> Iterator[tuple[int, ...]]:
        for e, w in inc[v]:
            if w == s:
                if e != path[0] and path[0] < e and len(path) + 1 <= limit:
                    yield tuple(path) + (e,)
            elif w > s and not on_path[w] and len(path) + 1 < limit:
                on_path[w] = True
                path.append(e)
                yield from walk(s, w, path)
                path.pop()
                on_path[w] = False

    for s in range(G.n):
        on_path[s] = True
        for e, w in inc[s]:
            if w > s:
                on_path[w] = True
                yield from walk(s, w, [e])
                on_path[w] = False
        on_path[s] = False


def local_minimize(G: Multigraph, X: Iterable[int], H: Iterable[int],
                   full_enumeration: Optional[bool] = None) -> frozenset[int]:
    """Flip cycles that have strictly more than half of their edges in H.

    Every flip keeps all degree parities and shrinks H, so the loop ends.  By
    default the search looks at every cycle when ``G.n <= FULL_CYCLE_BOUND``
    and only at cycles of length at most 3 otherwise.  Cycles with exactly
    half of their edges in H are left alone.
    """
    X = parity_target(G, X)
    H = set(check_edge_set(G, H))
    if not has_parity(G, X, H):
        raise ValueError("H does not have odd degree exactly on X")
    if full_enumeration is None:
        full_enumeration = G.n <= FULL_CYCLE_BOUND
    max_length = None if full_enumeration else 3
    while True:
        for cyc in enumerate_cycles(G, max_length):
            inside = sum(1 for e in cyc if e in H)
            if 2 * inside > len(cyc):
                H.symmetric_difference_update(cyc)
                break
        else:
            return frozenset(H)
