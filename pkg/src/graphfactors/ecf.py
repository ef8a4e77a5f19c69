"""Even caterpillar factors of trees in linear time.

The tree is hung from a leaf r.  Every other vertex v labels the edge to its
parent u with a subset of

    R   uv is not in the factor
    B   uv lies on the spine of a caterpillar
    G   uv is in the factor and v is a leaf hanging from u
    G*  uv is in the factor and u is a leaf hanging from v

computed from the label sets of v's child edges.  A set is represented as a
bit mask over ``R | B | G | GSTAR``.

The linear-time pass relies on three facts about these sets:

* once reduced, a set holds at most one of G*, B, G (plus possibly R), so a
  parent only needs, per reduced set type, how many children carry it;
* with two or more children lacking R only the parity of the number of G/B
  entries, and whether B occurs at most twice, matters, so two optional
  {R,B} and two optional {R,G} children suffice;
* the remaining vertices fall into two special cases resolved in O(1).

Child counts per type are packed into one integer per vertex and the combine
step is memoised on that integer.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

from .caterpillar import caterpillar_defect
from .graph import Multigraph
from .trees import NotATreeError, RootedTree, leaf_root, root_tree

R, B, G, GSTAR = 1, 2, 4, 8
ALL_LABELS = (R, B, G, GSTAR)
_NAMES = {R: "R", B: "B", G: "G", GSTAR: "G*"}


def label_names(mask: int) -> frozenset[str]:
    return frozenset(name for bit, name in _NAMES.items() if mask & bit)


def _rule_counts(g: int, b: int) -> int:
    s = g + b
    if s == 0:
        return G
    if s == 1:
        return R | B
    if s % 2 == 0:
        return R
    return B if b <= 1 else GSTAR


def local_label_rule(C: Sequence[int]) -> int:
    """Label set produced at a vertex whose child edges carry the labels C."""
    b = sum(1 for c in C if c == B)
    if b > 2:
        return 0
    if GSTAR in C:
        non_red = sum(1 for c in C if c != R)
        return 0 if non_red > 1 else R
    g = sum(1 for c in C if c == G)
    return _rule_counts(g, b)


def reduce_labels(mask: int) -> int:
    """Drop labels that another label in the same set dominates.

    G* is dominated by B and by G; B is dominated by G.
    """
    if mask & (B | G):
        mask &= ~GSTAR
    if mask & G:
        mask &= ~B
    return mask


# packed child counters: one 21-bit field per reduced set type
_FIELD = 21
_LOW = (1 << _FIELD) - 1
_SLOT = {0: 0, B: 1, G: 2, GSTAR: 3, R | B: 4, R | G: 5, R | GSTAR: 6}
_WEIGHT = [0] * 16
for _mask, _slot in _SLOT.items():
    _WEIGHT[_mask] = 1 << (_FIELD * _slot)


def _combine(key: int) -> tuple[int, tuple]:
    """Reduced label set for a vertex from its packed child counts.

    Returns ``(mask, specs)`` where ``specs[label]`` says which optional
    children to switch on when that label is chosen: ``()`` for none,
    ``(nb, ng, False)`` for the first nb {R,B} and ng {R,G} children by id,
    ``(0, 0, True)`` for the first child whose set is {R,X} with X != R.
    """
    c_empty, c_b, c_g, c_gs, c_rb, c_rg, c_rgs = ((key >> (_FIELD * i)) & _LOW for i in range(7))
    specs: list = [None] * 9
    if c_empty:
        return 0, tuple(specs)
    missing = c_b + c_g + c_gs
    if missing == 0:
        specs[G] = ()
        mask = G
        if c_rb or c_rg or c_rgs:
            mask |= R
            specs[R] = (0, 0, True)
        return mask, tuple(specs)
    if missing == 1:
        mask = R if c_gs else R | B
        specs[R] = ()
        if mask & B:
            specs[B] = ()
        return mask, tuple(specs)
    if c_gs:
        return 0, tuple(specs)
    mask = 0
    for nb in range(min(c_rb, 2) + 1):
        b = c_b + nb
        if b > 2:
            break
        for ng in range(min(c_rg, 2) + 1):
            got = _rule_counts(c_g + ng, b)
            for bit in ALL_LABELS:
                if got & bit and specs[bit] is None:
                    specs[bit] = (nb, ng, False) if nb or ng else ()
            mask |= got
    reduced = reduce_labels(mask)
    for bit in ALL_LABELS:
        if mask & bit and not reduced & bit:
            specs[bit] = None
    return reduced, tuple(specs)


def _bottom_up(rt: RootedTree, stop_on_empty: bool):
    n = rt.n
    packed = [0] * n
    labels = [0] * n
    entry: list = [None] * n
    cache: dict[int, tuple] = {}
    parent = rt.parent
    weight = _WEIGHT
    for v in rt.order[:0:-1]:
        key = packed[v]
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = _combine(key)
        mask = hit[0]
        labels[v] = mask
        entry[v] = hit
        if not mask and stop_on_empty:
            return None
        packed[parent[v]] += weight[mask]
    return labels, entry


def _exhaustive(rt: RootedTree) -> list[int]:
    labels = [0] * rt.n
    for v in rt.order[:0:-1]:
        options = [[bit for bit in ALL_LABELS if labels[c] & bit] for c in rt.children(v)]
        mask = 0
        for combo in itertools.product(*options):
            mask |= local_label_rule(combo)
        labels[v] = mask
    return labels


def ecf_edge_labels(T: Multigraph, root: Optional[int] = None,
                    exhaustive: bool = False) -> tuple[RootedTree, list[int]]:
    """Label set of every edge, indexed by its lower (child) endpoint.

    ``exhaustive=True`` runs the unreduced DP over all child-label tuples,
    which is exponential in the degree; otherwise the reduced linear pass.
    The root entry is 0.
    """
    if root is None:
        root = leaf_root(T)
        if root is None:
            root = 0
    rt = root_tree(T, root)
    if exhaustive:
        return rt, _exhaustive(rt)
    return rt, _bottom_up(rt, stop_on_empty=False)[0]


def ecf_accepts(root_edge_labels: int) -> bool:
    """Decision at the root edge: nonempty and not just {R}."""
    return bool(root_edge_labels & ~R)


def ecf_tree_solve(T: Multigraph, verify: bool = True) -> Optional[frozenset[int]]:
    """An even caterpillar factor of the tree T, or None if there is none."""
    if T.n == 0 or T.m != T.n - 1:
        raise NotATreeError("ecf_tree_solve needs a tree")
    if T.n == 1:
        return None
    rt = root_tree(T, leaf_root(T))
    up = _bottom_up(rt, stop_on_empty=True)
    if up is None:
        return None
    labels, entry = up
    top = rt.order[1]
    if not ecf_accepts(labels[top]):
        return None

    chosen = [0] * rt.n
    chosen[top] = next(bit for bit in (B, G, GSTAR) if labels[top] & bit)
    parent_edge = rt.parent_edge
    ptr, kids = rt.child_ptr, rt.child_idx
    factor = []
    for v in rt.order[1:]:
        x = chosen[v]
        if not x:
            mask = labels[v]
            x = R if mask & R else mask
        if x != R:
            factor.append(parent_edge[v])
        pick = entry[v][1][x]
        if not pick:
            continue
        nb, ng, first_any = pick
        for c in kids[ptr[v]:ptr[v + 1]]:
            mask = labels[c]
            if first_any:
                if mask & R and mask != R:
                    chosen[c] = mask & ~R
                    break
            elif mask == R | B and nb:
                chosen[c] = B
                nb -= 1
            elif mask == R | G and ng:
                chosen[c] = G
                ng -= 1
            elif not (nb or ng):
                break
    result = frozenset(factor)
    if verify:
        defect = caterpillar_defect(T, result, "even")
        if defect is not None:
            raise AssertionError(f"reconstructed even caterpillar factor is invalid: {defect}")
    return result
