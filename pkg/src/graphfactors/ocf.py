"""Odd caterpillar factors of trees.

In an odd caterpillar factor every degree is odd, so each component has even
order.  For a tree T of even order the edges whose removal leaves two odd
components are forced into any such factor, and they form one exactly when
one exists; computing them only needs subtree orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .caterpillar import caterpillar_defect
from .graph import Multigraph
from .trees import NotATreeError, RootedTree, root_tree


@dataclass(frozen=True)
class OddnessProfile:
    """Per vertex: number of odd components of ``T - v`` and class ``"A"``/``"B"``."""

    oddness: tuple[int, ...]
    cls: tuple[str, ...]

    def b_vertices(self) -> list[int]:
        return [v for v, c in enumerate(self.cls) if c == "B"]


def _sizes(T: Multigraph) -> tuple[RootedTree, list[int]]:
    rt = root_tree(T, 0)
    return rt, rt.subtree_sizes()


def oddness_profile(T: Multigraph) -> OddnessProfile:
    """Oddness of every vertex of a tree from one pass of subtree orders.

    A vertex is an A-vertex when its oddness is 1 and a B-vertex otherwise.
    """
    rt, t = _sizes(T)
    n = T.n
    odd = [0] * n
    parent = rt.parent
    for v in range(n):
        p = parent[v]
        if p < 0:
            continue
        if t[v] % 2:
            odd[p] += 1
        if (n - t[v]) % 2:
            odd[v] += 1
    return OddnessProfile(tuple(odd), tuple("A" if o == 1 else "B" for o in odd))


def star_condition_holds(T: Multigraph) -> bool:
    """Every vertex has at most two B-neighbours lying in odd components of ``T - v``."""
    n = T.n
    if n % 2:
        raise ValueError("the star condition is only meaningful for trees of even order")
    rt, t = _sizes(T)
    profile = oddness_profile(T)
    is_b = [c == "B" for c in profile.cls]
    count = [0] * n
    for v in range(n):
        p = rt.parent[v]
        if p < 0:
            continue
        if is_b[p] and (n - t[v]) % 2:
            count[v] += 1
        if is_b[v] and t[v] % 2:
            count[p] += 1
    return max(count, default=0) <= 2


def marked_edges(T: Multigraph) -> frozenset[int]:
    """Edges e of the tree such that ``T - e`` has two odd components."""
    rt, t = _sizes(T)
    n = T.n
    t = np.asarray(t)
    pe = np.asarray(rt.parent_edge)
    keep = (pe >= 0) & (t % 2 == 1) & ((n - t) % 2 == 1)
    return frozenset(pe[keep].tolist())


def ocf_tree_solve(T: Multigraph) -> Optional[frozenset[int]]:
    """The marked edge set if it is an odd caterpillar factor, else None."""
    if T.n == 0 or T.m != T.n - 1:
        raise NotATreeError("ocf_tree_solve needs a tree")
    if T.n % 2:
        root_tree(T, 0)  # still reject non-trees of odd order
        return None
    F = marked_edges(T)
    return F if caterpillar_defect(T, F, "odd") is None else None
