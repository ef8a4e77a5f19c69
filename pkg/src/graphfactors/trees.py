"""Rooted views of trees, built with array BFS so that n = 10**6 stays cheap."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import breadth_first_order

from .graph import Multigraph


class NotATreeError(ValueError):
    pass


@dataclass(frozen=True)
class RootedTree:
    """A tree hung from ``root``.

    ``order`` is a BFS order (parents before children), ``parent[root] == -1``,
    ``parent_edge[v]`` is the id of the edge from v to its parent, and the
    children of v are ``child_idx[child_ptr[v]:child_ptr[v + 1]]`` in increasing id.
    """

    root: int
    order: list[int]
    parent: list[int]
    parent_edge: list[int]
    child_ptr: list[int]
    child_idx: list[int]

    @property
    def n(self) -> int:
        return len(self.parent)

    def children(self, v: int) -> list[int]:
        return self.child_idx[self.child_ptr[v]:self.child_ptr[v + 1]]

    def postorder(self) -> list[int]:
        """Children before parents (reverse BFS order)."""
        return self.order[::-1]

    def subtree_sizes(self) -> list[int]:
        size = [1] * self.n
        parent = self.parent
        for v in reversed(self.order):
            p = parent[v]
            if p >= 0:
                size[p] += size[v]
        return size


def root_tree(T: Multigraph, root: int = 0) -> RootedTree:
    """Root a tree; raises NotATreeError for anything that is not a tree."""
    n = T.n
    if n == 0:
        raise NotATreeError("empty graph")
    if T.m != n - 1:
        raise NotATreeError(f"a tree on {n} vertices has {n - 1} edges, got {T.m}")
    if not 0 <= root < n:
        raise ValueError(f"root {root} out of range")
    if n == 1:
        return RootedTree(root, [root], [-1], [-1], [0, 0], [])
    E = T.edge_array
    U, V = E[:, 0], E[:, 1]
    A = sp.csr_matrix((np.ones(2 * len(U), dtype=np.int8), (np.r_[U, V], np.r_[V, U])), shape=(n, n))
    order, pred = breadth_first_order(A, root, directed=False, return_predecessors=True)
    if len(order) != n:
        raise NotATreeError("graph is disconnected")
    pred = pred.astype(np.int64)
    pred[root] = -1
    ids = np.arange(len(U), dtype=np.int64)
    pe = np.full(n, -1, dtype=np.int64)
    down = pred[V] == U
    pe[V[down]] = ids[down]
    up = ~down
    pe[U[up]] = ids[up]
    kids = np.flatnonzero(pred >= 0)
    kids = kids[np.argsort(pred[kids], kind="stable")]
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(pred[pred >= 0], minlength=n), out=ptr[1:])
    return RootedTree(root, order.tolist(), pred.tolist(), pe.tolist(), ptr.tolist(), kids.tolist())


def leaf_root(T: Multigraph) -> Optional[int]:
    """Smallest-id vertex of degree 1, if any."""
    deg = np.bincount(T.edge_array.ravel(), minlength=T.n)
    hits = np.flatnonzero(deg == 1)
    return int(hits[0]) if len(hits) else None
