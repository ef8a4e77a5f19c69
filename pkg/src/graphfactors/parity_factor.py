"""X-parity factors: spanning subgraphs with every degree positive and odd exactly on X.

Three constructions are provided, each tied to a structural hypothesis:

* ``b_factor_via_slack``: G has a connected factor H leaving slack at every
  vertex; the factor is ``E(G)`` minus a parity subgraph drawn inside H.
* ``x_parity_factor_triangle``: every vertex lies on a 2-cycle or 3-cycle;
  a parity subgraph is shrunk by triangle switches until it saturates no
  vertex, and its complement is returned.
* ``x_parity_factor_cubic``: G is connected, 3-regular, and its cut-edges lie
  on one path; vertex-disjoint paths pairing up ``V - X`` are cut out of a
  2-factor plus connecting matching edges.

``has_strong_parity_property`` decides the property exactly for small graphs
and ``detect_obstructions`` lists the local patterns that rule it out.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .graph import (Cycle, Multigraph, _DSU, bridges, check_edge_set, components,
                    cut_edges_on_path, degrees_in, is_connected, iter_perfect_matchings,
                    two_factor_cycles)
from .oracle import SearchLimitError, brute_x_parity_factor
from .parity import parity_spanning_subgraph, parity_target

BinarySequence = tuple[int, ...]


class ConstructionError(RuntimeError):
    """A construction could not complete on an input meeting its stated preconditions."""


def binary_degree_sequence(G: Multigraph) -> BinarySequence:
    return tuple(d % 2 for d in G.degrees)


def is_x_parity_factor(G: Multigraph, X: Iterable[int], F: Iterable[int]) -> bool:
    """Every degree in F is positive, and odd exactly on X."""
    X = parity_target(G, X)
    deg = degrees_in(G, check_edge_set(G, F))
    return all(d >= 1 and (d % 2 == 1) == (v in X) for v, d in enumerate(deg))


def _indicator(G: Multigraph, X: Iterable[int]) -> BinarySequence:
    X = parity_target(G, X)
    return tuple(int(v in X) for v in range(G.n))


def _check_certificate(G: Multigraph, X: frozenset[int], F: frozenset[int], who: str) -> frozenset[int]:
    if not is_x_parity_factor(G, X, F):
        raise AssertionError(f"{who} produced a set that is not an X-parity factor")
    return F


# slack route

def b_factor_via_slack(G: Multigraph, H: Iterable[int], B: Sequence[int]) -> frozenset[int]:
    """A factor of G whose degree parities are B, given a connected slack factor H.

    H must be connected and spanning with ``1 <= deg_H(v) < deg_G(v)``.  With
    A the degree parities of G, a parity subgraph K for ``A xor B`` is built
    inside H and ``E(G) - K`` is returned; the slack keeps every degree positive.
    """
    H = check_edge_set(G, H)
    B = tuple(int(b) for b in B)
    if len(B) != G.n or any(b not in (0, 1) for b in B):
        raise ValueError("B must be a 0/1 sequence with one entry per vertex")
    if sum(B) % 2:
        raise ValueError("B must have an even number of ones")
    deg_h = degrees_in(G, H)
    for v in range(G.n):
        if not 1 <= deg_h[v] < G.degree(v):
            raise ValueError(f"vertex {v}: deg_H = {deg_h[v]} violates 1 <= deg_H < deg_G = {G.degree(v)}")
    if not is_connected(G, H):
        raise ValueError("H is not connected")
    A = binary_degree_sequence(G)
    C = [v for v in range(G.n) if A[v] != B[v]]
    K = parity_spanning_subgraph(G, C, within=H)
    F = frozenset(range(G.m)) - K
    assert binary_degree_sequence_of(G, F) == B
    return F


def binary_degree_sequence_of(G: Multigraph, F: Iterable[int]) -> BinarySequence:
    return tuple(d % 2 for d in degrees_in(G, F))


def _simple_edges(G: Multigraph) -> list[int]:
    """First edge id for every adjacent vertex pair, loops dropped."""
    seen = set()
    out = []
    for e, (u, v) in enumerate(G.edges):
        key = (min(u, v), max(u, v))
        if u != v and key not in seen:
            seen.add(key)
            out.append(e)
    return out


def _hamiltonian_slack_path(G: Multigraph, budget: int) -> Optional[frozenset[int]]:
    n, deg = G.n, G.degrees
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in _simple_edges(G):
        u, v = G.edges[e]
        adj[u].append((v, e))
        adj[v].append((u, e))
    for row in adj:
        row.sort()
    steps = 0
    visited = [False] * n
    path_edges: list[int] = []

    def extend(v: int, length: int) -> bool:
        nonlocal steps
        if length == n:
            return True
        steps += 1
        if steps > budget:
            return False
        last = length + 1 == n
        for w, e in adj[v]:
            # an inner vertex of the path has degree 2 there, an end degree 1
            if not visited[w] and deg[w] >= (2 if last else 3):
                visited[w] = True
                path_edges.append(e)
                if extend(w, length + 1):
                    return True
                path_edges.pop()
                visited[w] = False
        return False

    for s in range(n):
        if deg[s] < 2:
            continue
        visited[s] = True
        if extend(s, 1):
            return frozenset(path_edges)
        visited[s] = False
        if steps > budget:
            break
    return None


def _kruskal(G: Multigraph, order: Iterable[int]) -> list[int]:
    dsu = _DSU(G.n)
    return [e for e in order if dsu.union(*G.edges[e])]


def _tree_local_search(G: Multigraph, max_rounds: int) -> Optional[frozenset[int]]:
    deg = G.degrees
    T = set(_kruskal(G, _simple_edges(G)))
    tdeg = degrees_in(G, T)
    candidates = _simple_edges(G)

    def saturated() -> list[int]:
        return [v for v in range(G.n) if tdeg[v] >= deg[v]]

    for _ in range(max_rounds):
        sat = saturated()
        if not sat:
            return frozenset(T)
        improved = False
        for v in sat:
            for e in sorted(T):
                a, b = G.edges[e]
                if v not in (a, b):
                    continue
                side = components(G, T - {e}).label
                for f in candidates:
                    if f in T:
                        continue
                    x, y = G.edges[f]
                    if side[x] == side[y]:
                        continue
                    touched = {a, b, x, y}
                    before = sum(tdeg[t] >= deg[t] for t in touched)
                    for t in (a, b):
                        tdeg[t] -= 1
                    for t in (x, y):
                        tdeg[t] += 1
                    after = sum(tdeg[t] >= deg[t] for t in touched)
                    if after < before:
                        T.remove(e)
                        T.add(f)
                        improved = True
                        break
                    for t in (a, b):
                        tdeg[t] += 1
                    for t in (x, y):
                        tdeg[t] -= 1
                if improved:
                    break
            if improved:
                break
        if not improved:
            return None
    return None


def _tree_exhaustive(G: Multigraph) -> Optional[frozenset[int]]:
    n = G.n
    cap = [d - 1 for d in G.degrees]
    if min(cap) < 1:
        return None
    cand = _simple_edges(G)
    tdeg = [0] * n
    chosen: list[int] = []

    def go(i: int, parent: list[int]) -> bool:
        if len(chosen) == n - 1:
            return True
        if len(cand) - i < n - 1 - len(chosen):
            return False
        e = cand[i]
        u, v = G.edges[e]
        if tdeg[u] < cap[u] and tdeg[v] < cap[v]:
            p = list(parent)
            ru, rv = _root(p, u), _root(p, v)
            if ru != rv:
                p[ru] = rv
                tdeg[u] += 1
                tdeg[v] += 1
                chosen.append(e)
                if go(i + 1, p):
                    return True
                chosen.pop()
                tdeg[u] -= 1
                tdeg[v] -= 1
        return go(i + 1, parent)

    return frozenset(chosen) if go(0, list(range(n))) else None


def _root(parent: list[int], x: int) -> int:
    while parent[x] != x:
        x = parent[x]
    return x


def find_slack_connected_factor(G: Multigraph, ham_bound: int = 12, exhaustive_bound: int = 10,
                                ham_budget: int = 200_000) -> Optional[frozenset[int]]:
    """A connected spanning edge set F with ``1 <= deg_F(v) < deg_G(v)`` everywhere, or None.

    Stages: a Hamiltonian path search (``n <= ham_bound``), a spanning-tree
    edge-swap search that removes saturated vertices, and for
    ``n <= exhaustive_bound`` an exhaustive spanning-tree search.  The last
    stage makes None exact for small graphs; for larger ones None only means
    that the heuristics gave up.
    """
    if G.n == 0:
        raise ValueError("empty graph")
    if not is_connected(G):
        raise ValueError("find_slack_connected_factor needs a connected graph")
    if G.n == 1:
        loops = [e for e, (u, v) in enumerate(G.edges)]
        return frozenset(loops[:1]) if len(loops) >= 2 else None
    if min(G.degrees) < 2:
        return None
    if G.n <= ham_bound:
        P = _hamiltonian_slack_path(G, ham_budget)
        if P is not None:
            return P
    T = _tree_local_search(G, max_rounds=4 * G.n)
    if T is not None:
        return T
    if G.n <= exhaustive_bound:
        return _tree_exhaustive(G)
    return None


def x_parity_factor_slack(G: Multigraph, X: Iterable[int]) -> frozenset[int]:
    X = parity_target(G, X)
    H = find_slack_connected_factor(G)
    if H is None:
        raise ConstructionError("no connected factor with slack at every vertex was found")
    return _check_certificate(G, X, b_factor_via_slack(G, H, _indicator(G, X)), "slack construction")


# triangle switches

def _short_cycle_vertices(G: Multigraph) -> list[bool]:
    """Which vertices lie on a loopless 2-cycle or 3-cycle."""
    n = G.n
    nbrs: list[dict[int, int]] = [dict() for _ in range(n)]
    for u, v in G.edges:
        if u != v:
            nbrs[u][v] = nbrs[u].get(v, 0) + 1
            nbrs[v][u] = nbrs[v].get(u, 0) + 1
    ok = [False] * n
    for v in range(n):
        if any(c >= 2 for c in nbrs[v].values()):
            ok[v] = True
            continue
        ws = sorted(nbrs[v])
        ok[v] = any(b in nbrs[a] for a, b in itertools.combinations(ws, 2))
    return ok


def x_parity_factor_triangle(G: Multigraph, X: Iterable[int],
                             history: Optional[list[int]] = None) -> frozenset[int]:
    """X-parity factor of a connected graph whose vertices all lie on 2- or 3-cycles.

    Start from a parity subgraph H for ``Y = X xor (odd-degree vertices)``.
    While possible, drop a loop or a parallel pair from H; otherwise take a
    vertex v with all its edges in H and a triangle ``v u u'``: remove the
    three triangle edges if ``uu'`` is in H, else swap ``uv, u'v`` for ``uu'``.
    Each step shrinks H; ``history`` receives ``|H|`` before every step.
    Returns ``E(G) - H``.
    """
    X = parity_target(G, X)
    if not is_connected(G):
        raise ValueError("x_parity_factor_triangle needs a connected graph")
    bad = [v for v, ok in enumerate(_short_cycle_vertices(G)) if not ok]
    if bad:
        raise ValueError(f"vertex {bad[0]} lies on no loopless 2-cycle or 3-cycle")
    A = binary_degree_sequence(G)
    Y = [v for v in range(G.n) if A[v] != (v in X)]
    H = set(parity_spanning_subgraph(G, Y))
    edges, inc, deg = G.edges, G.incidence, G.degrees
    while True:
        if history is not None:
            history.append(len(H))
        loop = next((e for e in sorted(H) if edges[e][0] == edges[e][1]), None)
        if loop is not None:
            H.remove(loop)
            continue
        pair = _parallel_pair(G, H)
        if pair is not None:
            H.difference_update(pair)
            continue
        hdeg = degrees_in(G, H)
        v = next((v for v in range(G.n) if hdeg[v] == deg[v]), None)
        if v is None:
            break
        switch = _triangle_at(G, H, v)
        if switch is None:
            raise ConstructionError(f"saturated vertex {v} has no triangle to switch on")
        drop, add = switch
        H.difference_update(drop)
        H.update(add)
    F = frozenset(range(G.m)) - H
    return _check_certificate(G, X, F, "triangle construction")


def _parallel_pair(G: Multigraph, H: set[int]) -> Optional[tuple[int, int]]:
    first: dict[tuple[int, int], int] = {}
    for e in sorted(H):
        u, v = G.edges[e]
        key = (min(u, v), max(u, v))
        if key in first:
            return first[key], e
        first[key] = e
    return None


def _triangle_at(G: Multigraph, H: set[int], v: int) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    at_v = sorted((w, e) for e, w in G.incidence[v] if w != v)
    index = G.edge_index()
    for (u, e1), (u2, e2) in itertools.combinations(at_v, 2):
        if u == u2:
            continue
        across = index.get((min(u, u2), max(u, u2)), [])
        if not across:
            continue
        inside = [f for f in across if f in H]
        if inside:
            return (e1, e2, inside[0]), ()
        return (e1, e2), (across[0],)
    return None


# cubic graphs

class NoPathSelection(ConstructionError):
    """The cycles and connectors admit no admissible system of Z-paths."""


@dataclass(frozen=True)
class ZPath:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def select_disjoint_paths(cycles: Sequence[Cycle], connectors: Sequence[tuple[int, int, int]],
                          Z: Iterable[int]) -> list[ZPath]:
    """Vertex-disjoint paths inside cycles plus connectors, with endpoints exactly Z.

    ``connectors`` are ``(edge id, u, v)`` joining different cycles and must
    form a spanning tree over the cycles, no vertex carrying two of them.
    A connector is on some path iff the side it cuts off holds an odd number
    of Z vertices.  On each cycle the vertices where a path must leave the
    cycle (Z vertices without a used connector and non-Z vertices with one)
    are paired by alternate arcs, which must avoid Z vertices already ending
    a path through their connector.  Among admissible arc classes the one
    with fewer edges wins, then the one holding the lexicographically
    smallest arc.  Raises NoPathSelection when some cycle has no admissible
    class.
    """
    Z = frozenset(Z)
    if len(Z) % 2:
        raise ValueError(f"|Z| = {len(Z)} is odd")
    if not Z:
        return []
    k = len(cycles)
    where: dict[int, int] = {}
    for i, c in enumerate(cycles):
        for v in c.vertices:
            if v in where:
                raise ValueError(f"vertex {v} lies on two cycles")
            where[v] = i
    missing = Z - where.keys()
    if missing:
        raise ValueError(f"Z vertex {min(missing)} lies on no cycle")
    at: dict[int, tuple[int, int, int]] = {}
    tree: list[list[tuple[int, tuple[int, int, int]]]] = [[] for _ in range(k)]
    for conn in connectors:
        e, u, v = conn
        if where[u] == where[v]:
            raise ValueError(f"connector {e} has both ends on one cycle")
        for x in (u, v):
            if x in at:
                raise ValueError(f"vertex {x} carries two connectors")
            at[x] = conn
        tree[where[u]].append((where[v], conn))
        tree[where[v]].append((where[u], conn))
    if len(connectors) != k - 1:
        raise ValueError("connectors must form a spanning tree over the cycles")

    order, up = [0], [None] * k
    seen = [False] * k
    seen[0] = True
    for c in order:
        for d, conn in tree[c]:
            if not seen[d]:
                seen[d] = True
                up[d] = conn
                order.append(d)
    if len(order) != k:
        raise ValueError("connectors must form a spanning tree over the cycles")
    zcount = [0] * k
    for z in Z:
        zcount[where[z]] += 1
    used: set[int] = set()
    for c in reversed(order):
        if up[c] is None:
            continue
        e, u, v = up[c]
        if zcount[c] % 2:
            used.update((u, v))
        parent = where[u] if where[v] == c else where[v]
        zcount[parent] += zcount[c]

    pieces: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for c in cycles:
        arcs = _choose_arcs(c, Z, used)
        if arcs is None:
            raise NoPathSelection(f"no admissible arcs on the cycle through vertex {c.vertices[0]}")
        pieces.extend(arcs)
    for x in sorted(used):
        e, u, v = at[x]
        if x == u:
            pieces.append(((u, v), (e,)))
    return _stitch(pieces, Z)


def _choose_arcs(c: Cycle, Z: frozenset[int], used: set[int]):
    L = len(c.vertices)
    ends = [i for i, v in enumerate(c.vertices) if (v in Z) != (v in used)]
    if not ends:
        return []
    blocked = {v for v in c.vertices if v in Z and v in used}
    best = None
    for shift in (0, 1):
        arcs = []
        ok = True
        for a in range(shift, len(ends), 2):
            i, j = ends[a], ends[(a + 1) % len(ends)]
            span = (j - i) % L or L
            verts = tuple(c.vertices[(i + t) % L] for t in range(span + 1))
            eds = tuple(c.edges[(i + t) % L] for t in range(span))
            if blocked.intersection(verts[1:-1]):
                ok = False
                break
            arcs.append((verts, eds))
        if not ok:
            continue
        size = sum(len(eds) for _, eds in arcs)
        smallest = min(_normal(verts) for verts, _ in arcs)
        key = (size, smallest)
        if best is None or key < best[0]:
            best = (key, arcs)
    return None if best is None else best[1]


def _normal(verts: tuple[int, ...]) -> tuple[int, ...]:
    return verts if verts[0] <= verts[-1] else verts[::-1]


def _stitch(pieces, Z: frozenset[int]) -> list[ZPath]:
    nxt: dict[int, list[tuple[int, tuple[int, ...], tuple[int, ...]]]] = {}
    for idx, (verts, eds) in enumerate(pieces):
        nxt.setdefault(verts[0], []).append((idx, verts, eds))
        nxt.setdefault(verts[-1], []).append((idx, verts[::-1], eds[::-1]))
    done = set()
    paths = []
    for z in sorted(Z):
        if z in done:
            continue
        verts, eds = [z], []
        prev = -1
        while True:
            step = [p for p in nxt.get(verts[-1], []) if p[0] != prev]
            if not step:
                break
            prev, pv, pe = step[0]
            verts.extend(pv[1:])
            eds.extend(pe)
        if verts[-1] not in Z or verts[-1] == z:
            raise AssertionError("path pieces do not pair up Z")
        done.update((z, verts[-1]))
        paths.append(ZPath(tuple(verts), tuple(eds)))
    return paths


def _connector_sets(G: Multigraph, M: frozenset[int], cycles: list[Cycle]) -> Iterator[list[tuple[int, int, int]]]:
    """Spanning trees of the cycle-contraction graph, lexicographic by edge id (Kruskal first)."""
    k = len(cycles)
    where = {v: i for i, c in enumerate(cycles) for v in c.vertices}
    cand = [(e, *G.edges[e]) for e in sorted(M) if where[G.edges[e][0]] != where[G.edges[e][1]]]

    def go(i: int, parent: list[int], picked: list) -> Iterator[list]:
        if len(picked) == k - 1:
            yield list(picked)
            return
        if len(cand) - i < k - 1 - len(picked):
            return
        e, u, v = cand[i]
        ru, rv = _root(parent, where[u]), _root(parent, where[v])
        if ru != rv:
            p = list(parent)
            p[ru] = rv
            picked.append(cand[i])
            yield from go(i + 1, p, picked)
            picked.pop()
        yield from go(i + 1, parent, picked)

    yield from go(0, list(range(k)), [])


def x_parity_factor_cubic(G: Multigraph, X: Iterable[int], max_matchings: int = 64,
                          max_connector_sets: int = 256) -> frozenset[int]:
    """X-parity factor of a connected cubic graph whose cut-edges lie on a path.

    For a perfect matching M, the cycles of ``G - M`` and a set of matching
    edges joining them into a tree, vertex-disjoint paths are chosen whose
    endpoints are exactly ``Z = V - X`` (see :func:`select_disjoint_paths`).
    Removing their edges leaves degree 2 on Z, 1 inside the paths and 3
    elsewhere.  Other connector sets and then other matchings are tried if
    a selection fails; ConstructionError if none works within the caps.
    """
    X = parity_target(G, X)
    if not G.is_regular(3):
        raise ValueError("x_parity_factor_cubic needs a 3-regular graph")
    if not is_connected(G):
        raise ValueError("x_parity_factor_cubic needs a connected graph")
    if not cut_edges_on_path(G):
        raise ValueError("the cut-edges do not lie on a common path")
    Z = frozenset(range(G.n)) - X
    if not Z:
        return frozenset(range(G.m))
    any_matching = False
    for M in itertools.islice(iter_perfect_matchings(G), max_matchings):
        any_matching = True
        cycles = two_factor_cycles(G, M)
        for conns in itertools.islice(_connector_sets(G, M, cycles), max_connector_sets):
            try:
                paths = select_disjoint_paths(cycles, conns, Z)
            except NoPathSelection:
                continue
            cut = {e for p in paths for e in p.edges}
            return _check_certificate(G, X, frozenset(range(G.m)) - cut, "cubic construction")
    if not any_matching:
        raise ValueError("G has no perfect matching")
    raise ConstructionError("no perfect matching and connector set admitted a path selection")


# strong parity property

def spp_counterexample(G: Multigraph, max_n: int = 14) -> Optional[frozenset[int]]:
    """The first even-size X (by size, then lexicographically) with no X-parity factor, or None."""
    if G.n == 0:
        raise ValueError("empty graph")
    if not is_connected(G):
        raise ValueError("the strong parity property is checked on connected graphs")
    if max_n is not None and G.n > max_n:
        raise SearchLimitError(f"n = {G.n} exceeds the subset-sweep limit {max_n}; "
                               "use x_parity_factor_cubic/_triangle/_slack for constructive answers")
    for size in range(0, G.n + 1, 2):
        for X in itertools.combinations(range(G.n), size):
            if brute_x_parity_factor(G, X, max_edges=None) is None:
                return frozenset(X)
    return None


def has_strong_parity_property(G: Multigraph, max_n: int = 14) -> bool:
    """Whether every even-size X admits an X-parity factor, by exhaustive sweep."""
    return spp_counterexample(G, max_n) is None


@dataclass(frozen=True)
class ObstructionReport:
    witnesses: tuple[tuple[str, tuple[int, ...]], ...]

    def __bool__(self) -> bool:
        return bool(self.witnesses)

    def __len__(self) -> int:
        return len(self.witnesses)

    def of_kind(self, kind: str) -> list[tuple[int, ...]]:
        return [w for k, w in self.witnesses if k == kind]


def _order_without(G: Multigraph, start: int, removed: int) -> int:
    seen = {start, removed}
    stack = [start]
    while stack:
        v = stack.pop()
        for _, w in G.incidence[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) - 1


def detect_obstructions(G: Multigraph) -> ObstructionReport:
    """Local patterns that rule out the strong parity property.

    ``("i", (v,))``: v has degree 1.
    ``("ii", (v1, v2, v3))``: a path of three degree-2 vertices in a graph
    with more than three vertices.
    ``("iii", (v1, v2, v3, v4))``: a path ``v1 v2 v3`` with degrees 2, 3, 2,
    where ``v2 v4`` is a cut-edge and v2's component in ``G - v4`` has at
    least 4 vertices.
    Paths are reported once, with ``v1 < v3``.
    """
    if not is_connected(G):
        raise ValueError("detect_obstructions needs a connected graph")
    deg = G.degrees
    out: list[tuple[str, tuple[int, ...]]] = []
    out += [("i", (v,)) for v in range(G.n) if deg[v] == 1]
    cut = bridges(G)

    def simple_nbrs(v: int) -> list[tuple[int, int]]:
        return sorted((w, e) for e, w in G.incidence[v] if w != v)

    for v2 in range(G.n):
        nb = simple_nbrs(v2)
        if deg[v2] == 2 and G.n > 3 and len(nb) == 2 and nb[0][0] != nb[1][0]:
            v1, v3 = nb[0][0], nb[1][0]
            if deg[v1] == 2 and deg[v3] == 2:
                out.append(("ii", (v1, v2, v3)))
        if deg[v2] == 3 and len(nb) == 3 and len({w for w, _ in nb}) == 3:
            for (a, _), (b, _) in itertools.combinations(nb, 2):
                if deg[a] != 2 or deg[b] != 2:
                    continue
                (v4, e4), = [(w, e) for w, e in nb if w not in (a, b)]
                if e4 in cut and _order_without(G, v2, v4) >= 4:
                    out.append(("iii", (a, v2, b, v4)))
    return ObstructionReport(tuple(out))


# dispatch

METHODS = ("auto", "brute", "slack", "triangle", "cubic")


def x_parity_factor(G: Multigraph, X: Iterable[int], method: str = "auto",
                    max_edges: Optional[int] = 30) -> Optional[frozenset[int]]:
    """An X-parity factor of G, or None when the exact search proves there is none.

    ``auto`` tries the cubic construction (3-regular, cut-edges on a path),
    then triangle switches (every vertex on a 2- or 3-cycle), then the slack
    route, then exhaustive search within ``max_edges``.
    """
    X = parity_target(G, X)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "brute":
        return brute_x_parity_factor(G, X, max_edges=max_edges)
    if method == "cubic":
        return x_parity_factor_cubic(G, X)
    if method == "triangle":
        return x_parity_factor_triangle(G, X)
    if method == "slack":
        return x_parity_factor_slack(G, X)
    if G.n and is_connected(G):
        if G.is_regular(3) and cut_edges_on_path(G):
            try:
                return x_parity_factor_cubic(G, X)
            except ConstructionError:
                pass
        if all(_short_cycle_vertices(G)):
            return x_parity_factor_triangle(G, X)
        try:
            return x_parity_factor_slack(G, X)
        except ConstructionError:
            pass
    return brute_x_parity_factor(G, X, max_edges=max_edges)
