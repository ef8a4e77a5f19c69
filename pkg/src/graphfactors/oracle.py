"""Exact exponential-time reference solvers and seeded instance generators."""

from __future__ import annotations

from typing import Optional

import numpy as np

from .caterpillar import caterpillar_defect
from .cnf import CnfFormula, Lit
from .graph import Multigraph
from .parity import parity_target


class SearchLimitError(ValueError):
    """The instance is larger than an exhaustive search is allowed to take on."""


def brute_x_parity_factor(G: Multigraph, X, max_edges: Optional[int] = 30) -> Optional[frozenset[int]]:
    """An X-parity factor of G or None, by backtracking over edges in id order.

    Edges are tried included before excluded.  A branch dies as soon as an
    endpoint can no longer reach a positive degree of the right parity with
    the edges it has left.
    """
    target = parity_target(G, X)
    n, m = G.n, G.m
    if max_edges is not None and m > max_edges:
        raise SearchLimitError(f"{m} edges exceeds the exhaustive-search limit of {max_edges}")
    want = [1 if v in target else 0 for v in range(n)]
    deg = [0] * n
    rem_plain = [0] * n  # undecided non-loop incidences
    rem_loop = [0] * n
    for u, v in G.edges:
        if u == v:
            rem_loop[u] += 1
        else:
            rem_plain[u] += 1
            rem_plain[v] += 1

    def feasible(v: int) -> bool:
        d = deg[v]
        goal = max(d, 1)
        if goal % 2 != want[v]:
            goal += 1
        extra = goal - d
        if extra == 0:
            return True
        if extra == 1:
            return rem_plain[v] >= 1
        return rem_plain[v] >= 2 or rem_loop[v] >= 1

    if not all(feasible(v) for v in range(n)):
        return None
    edges = G.edges
    chosen: list[int] = []

    def go(e: int) -> bool:
        if e == m:
            return True
        u, v = edges[e]
        if u == v:
            rem_loop[u] -= 1
        else:
            rem_plain[u] -= 1
            rem_plain[v] -= 1
        deg[u] += 1
        deg[v] += 1
        if feasible(u) and feasible(v):
            chosen.append(e)
            if go(e + 1):
                return True
            chosen.pop()
        deg[u] -= 1
        deg[v] -= 1
        if feasible(u) and feasible(v) and go(e + 1):
            return True
        if u == v:
            rem_loop[u] += 1
        else:
            rem_plain[u] += 1
            rem_plain[v] += 1
        return False

    return frozenset(chosen) if go(0) else None


def _find(dsu: list[int], x: int) -> int:
    while dsu[x] != x:
        dsu[x] = dsu[dsu[x]]
        x = dsu[x]
    return x


def _parity_cuts(n: int, inc, status: list[int]) -> Optional[list[int]]:
    """Order-parity reasoning on the graph of edges not yet excluded.

    Odd caterpillars have even order, so every component of that graph must
    have even order (else None), and an undecided bridge leaving two odd
    sides must be in the factor (returned).
    """
    disc = [-1] * n
    low = [0] * n
    size = [1] * n
    forced: list[int] = []
    clock = 0
    for s in range(n):
        if disc[s] >= 0:
            continue
        disc[s] = low[s] = clock
        clock += 1
        cuts = []
        stack = [(s, -1, iter(inc[s]))]
        while stack:
            v, pe, it = stack[-1]
            for f, w in it:
                if status[f] == 0 or f == pe:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, f, iter(inc[w])))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    size[p] += size[v]
                    if low[v] > disc[p]:
                        cuts.append((pe, size[v]))
        if size[s] % 2:
            return None
        forced += [f for f, sz in cuts if sz % 2 and status[f] == -1]
    return forced


def brute_caterpillar_factor(G: Multigraph, kind: str, propagate: bool = True,
                             max_edges: Optional[int] = -1) -> Optional[frozenset[int]]:
    """An even or odd caterpillar factor of G, or None.

    Search state is a decision per edge.  Including an edge must keep the
    chosen edges a forest in which every vertex of degree >= 2 has at most two
    neighbours of degree >= 2, which is exactly "every component is a
    caterpillar" and only gets harder as edges are added.  Every vertex must
    still be able to end at an allowed degree (1 or even for ``even``, odd for
    ``odd``).  With ``propagate`` a vertex whose allowed degrees leave no
    choice forces all its undecided edges, and for ``odd`` the order-parity
    cuts of :func:`_parity_cuts` prune and force as well.

    The default edge limit is 40 with propagation and 30 without; pass
    ``max_edges=None`` to lift it.
    """
    if kind not in ("even", "odd"):
        raise ValueError(f"kind must be 'even' or 'odd', not {kind!r}")
    if max_edges == -1:
        max_edges = 40 if propagate else 30
    n, m = G.n, G.m
    if max_edges is not None and m > max_edges:
        raise SearchLimitError(f"{m} edges exceeds the exhaustive-search limit of {max_edges}")
    if n == 0:
        return frozenset()
    edges, inc = G.edges, G.incidence
    top = max(G.degrees) + 1
    if kind == "even":
        allowed = [d == 1 or (d >= 2 and d % 2 == 0) for d in range(top)]
    else:
        allowed = [d % 2 == 1 for d in range(top)]

    status = [-1] * m
    deg = [0] * n
    und = [0] * n
    for e, (u, v) in enumerate(edges):
        if u == v:
            status[e] = 0
        else:
            und[u] += 1
            und[v] += 1
    root = (status, deg, und, list(range(n)))
    use_cuts = propagate and kind == "odd"

    def assign(st, e: int, val: int, queue: list[int]) -> bool:
        status, deg, und, dsu = st
        status[e] = val
        u, v = edges[e]
        und[u] -= 1
        und[v] -= 1
        queue.append(u)
        queue.append(v)
        if not val:
            return True
        ru, rv = _find(dsu, u), _find(dsu, v)
        if ru == rv:
            return False
        dsu[ru] = rv
        deg[u] += 1
        deg[v] += 1
        touched = {u, v}
        for x in (u, v):
            touched.update(w for f, w in inc[x] if status[f] == 1)
        for x in touched:
            if deg[x] >= 2 and sum(1 for f, w in inc[x] if status[f] == 1 and deg[w] >= 2) > 2:
                return False
        return True

    def settle(st, queue: list[int]) -> bool:
        status, deg, und, _ = st
        while queue:
            v = queue.pop()
            d, k = deg[v], und[v]
            options = [t for t in range(d, d + k + 1) if allowed[t]]
            if not options:
                return False
            if not propagate or k == 0:
                continue
            if options[0] == d + k:
                val = 1
            elif options[-1] == d:
                val = 0
            else:
                continue
            for f, _ in inc[v]:
                if status[f] == -1 and not assign(st, f, val, queue):
                    return False
        return True

    def pick(st) -> int:
        status, deg, und, _ = st
        best = -1
        for v in range(n):
            if und[v] and (best < 0 or und[v] < und[best]):
                best = v
        if best < 0:
            return -1
        return min(f for f, _ in inc[best] if status[f] == -1)

    def cuts(st) -> bool:
        while True:
            forced = _parity_cuts(n, inc, st[0])
            if forced is None:
                return False
            if not forced:
                return True
            queue: list[int] = []
            for f in forced:
                if st[0][f] == -1 and not assign(st, f, 1, queue):
                    return False
            if not settle(st, queue):
                return False

    def go(st) -> Optional[list[int]]:
        if use_cuts and not cuts(st):
            return None
        e = pick(st)
        if e < 0:
            return st[0]
        for val in (1, 0):
            child = tuple(list(a) for a in st)
            queue: list[int] = []
            if assign(child, e, val, queue) and settle(child, queue):
                found = go(child)
                if found is not None:
                    return found
        return None

    if not settle(root, list(range(n))):
        return None
    found = go(root)
    if found is None:
        return None
    S = frozenset(e for e in range(m) if found[e] == 1)
    defect = caterpillar_defect(G, S, kind)
    if defect is not None:
        raise AssertionError(f"search produced an invalid factor: {defect}")
    return S


def dpll_sat(F: CnfFormula) -> Optional[tuple[bool, ...]]:
    """A satisfying assignment or None.

    Unit propagation, then branching on the lowest-index unassigned variable
    (true first).  Variables left free once every clause is satisfied are
    set to false.
    """
    clauses = [tuple(lit.dimacs() for lit in c) for c in F.clauses]

    def solve(assign: dict[int, bool]) -> Optional[dict[int, bool]]:
        changed = True
        while changed:
            changed = False
            for c in clauses:
                free = set()
                for x in c:
                    val = assign.get(abs(x))
                    if val is None:
                        free.add(x)
                    elif val == (x > 0):
                        break
                else:
                    if not free:
                        return None
                    if len(free) == 1:
                        x = free.pop()
                        assign[abs(x)] = x > 0
                        changed = True
        unresolved = sorted({abs(x) for c in clauses for x in c
                             if not any(assign.get(abs(y)) == (y > 0) for y in c)} - set(assign))
        if not unresolved:
            return assign
        var = unresolved[0]
        for val in (True, False):
            found = solve({**assign, var: val})
            if found is not None:
                return found
        return None

    found = solve({})
    if found is None:
        return None
    return tuple(found.get(i + 1, False) for i in range(F.num_vars))


# generators

def random_tree(n: int, seed: int) -> Multigraph:
    """Random parent array, then a random relabelling of the vertices."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    rng = np.random.default_rng(seed)
    if n == 1:
        return Multigraph(1, ())
    child = np.arange(1, n)
    parent = (rng.random(n - 1) * child).astype(np.int64)
    label = rng.permutation(n)
    return Multigraph.from_edges(n, zip(label[parent].tolist(), label[child].tolist()))


def random_cubic(n: int, seed: int, simple: bool = True, max_tries: int = 1000) -> Multigraph:
    """A Hamiltonian cycle on a random vertex order plus a random perfect matching.

    The cycle keeps the graph connected.  With ``simple`` a draw that creates
    a parallel edge is rejected and redrawn.
    """
    if n % 2 or n < (4 if simple else 2):
        raise ValueError(f"no {'simple ' if simple else ''}connected cubic graph on {n} vertices")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        order = rng.permutation(n).tolist()
        cycle = [(order[i], order[(i + 1) % n]) for i in range(n)]
        pairs = rng.permutation(n).tolist()
        matching = [(pairs[2 * i], pairs[2 * i + 1]) for i in range(n // 2)]
        if simple:
            seen = {frozenset(e) for e in cycle}
            if any(frozenset(e) in seen for e in matching):
                continue
        return Multigraph.from_edges(n, cycle + matching)
    raise RuntimeError(f"no simple cubic graph drawn in {max_tries} tries")


def random_cnf(num_vars: int, num_clauses: int, seed: int) -> CnfFormula:
    """Uniform clauses over three distinct variables with random signs."""
    if num_clauses and num_vars < 3:
        raise ValueError("clauses with three distinct variables need at least 3 variables")
    rng = np.random.default_rng(seed)
    clauses = []
    for _ in range(num_clauses):
        vs = rng.choice(num_vars, size=3, replace=False).tolist()
        signs = rng.integers(0, 2, size=3).tolist()
        clauses.append(tuple(Lit(v, bool(s)) for v, s in zip(vs, signs)))
    return CnfFormula(num_vars, tuple(clauses))


def random_multigraph(n: int, m: int, seed: int, loops: bool = True, parallel: bool = True) -> Multigraph:
    """A connected multigraph: a random tree plus ``m - n + 1`` random extra edges, shuffled."""
    if n < 1 or m < n - 1:
        raise ValueError(f"a connected graph on {n} vertices needs at least {n - 1} edges")
    rng = np.random.default_rng(seed)
    edges = list(random_tree(n, int(rng.integers(2**63 - 1))).edges)
    seen = {frozenset(e) for e in edges}
    capacity = n * (n - 1) // 2 + (n if loops else 0)
    if n == 1 and m and not loops:
        raise ValueError("a single vertex only carries loops")
    if not parallel and m > capacity:
        raise ValueError(f"at most {capacity} edges without parallel edges")
    while len(edges) < m:
        u, v = (int(x) for x in rng.integers(0, n, size=2))
        if u == v and not loops:
            continue
        if not parallel and frozenset((u, v)) in seen:
            continue
        seen.add(frozenset((u, v)))
        edges.append((u, v))
    perm = rng.permutation(len(edges)).tolist()
    return Multigraph.from_edges(n, [edges[i] for i in perm])


def generate(kind: str, seed: int, **params):
    """Dispatch to the generator for ``tree``, ``cubic``, ``cnf`` or ``multigraph``."""
    if kind == "tree":
        return random_tree(params.get("n", 10), seed)
    if kind == "cubic":
        return random_cubic(params.get("n", 8), seed, simple=params.get("simple", True))
    if kind == "cnf":
        return random_cnf(params.get("k", 3), params.get("l", 1), seed)
    if kind == "multigraph":
        n = params.get("n", 6)
        return random_multigraph(n, params.get("m", n + 2), seed,
                                 loops=params.get("loops", True), parallel=params.get("parallel", True))
    raise ValueError(f"unknown instance kind {kind!r}")
