"""Gadget graphs that encode a 3-CNF formula as a caterpillar-factor instance.

``build_gf_star`` gives a bipartite graph with an even caterpillar factor iff
the formula is satisfiable; ``build_hf_star`` does the same for odd
caterpillar factors.  Both return a :class:`GadgetMap` naming every vertex,
and the certificate helpers translate truth assignments into factors and
back.

Vertex names for variable i (1-based) are ``x_i``, ``y_i``, ``y'_i``,
``y''_i``, ``z'_i,t``, ``z''_i,t``, ``x^s_i``, ``u^s_i``, ``v^s_i``
(s in {0, 1}); clause j gives ``c_j`` and, in the odd construction, its twin
``d_j``.  The two copies in the odd construction are ``(w,1)`` and ``(w,2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .caterpillar import caterpillar_defect
from .cnf import CnfFormula, Lit
from .graph import Multigraph, check_edge_set, components, two_coloring


@dataclass(frozen=True)
class GadgetMap:
    names: tuple[str, ...]  # id -> name
    ids: dict[str, int] = field(hash=False, compare=False, repr=False)

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "GadgetMap":
        names = tuple(names)
        ids = {name: i for i, name in enumerate(names)}
        if len(ids) != len(names):
            raise ValueError("duplicate vertex name")
        return cls(names, ids)

    def __getitem__(self, name: str) -> int:
        return self.ids[name]

    def __len__(self) -> int:
        return len(self.names)


class _Builder:
    def __init__(self):
        self.names: list[str] = []
        self.edges: list[tuple[int, int]] = []
        self.ids: dict[str, int] = {}

    def vertex(self, name: str) -> None:
        self.ids[name] = len(self.names)
        self.names.append(name)

    def edge(self, a: str, b: str) -> None:
        self.edges.append((self.ids[a], self.ids[b]))

    def finish(self) -> tuple[Multigraph, GadgetMap]:
        G = Multigraph.from_edges(len(self.names), self.edges)
        assert two_coloring(G) is not None, "gadget graph is not bipartite"
        return G, GadgetMap.from_names(self.names)


def _lit_vertex(lit: Lit) -> str:
    return f"x^{int(lit.positive)}_{lit.var + 1}"


def build_gf_star(F: CnfFormula) -> tuple[Multigraph, GadgetMap]:
    """The even-caterpillar gadget graph: ``16k + l`` vertices, ``15k + 3l`` edges."""
    b = _Builder()
    for i in range(1, F.num_vars + 1):
        for name in (f"x_{i}", f"y_{i}", f"y'_{i}", f"y''_{i}",
                     *(f"z'_{i},{t}" for t in (1, 2, 3)), *(f"z''_{i},{t}" for t in (1, 2, 3)),
                     f"x^0_{i}", f"x^1_{i}", f"u^0_{i}", f"v^0_{i}", f"u^1_{i}", f"v^1_{i}"):
            b.vertex(name)
        b.edge(f"x_{i}", f"y_{i}")
        b.edge(f"x_{i}", f"y'_{i}")
        b.edge(f"x_{i}", f"y''_{i}")
        for t in (1, 2, 3):
            b.edge(f"y'_{i}", f"z'_{i},{t}")
        for t in (1, 2, 3):
            b.edge(f"y''_{i}", f"z''_{i},{t}")
        for s in (0, 1):
            b.edge(f"x_{i}", f"x^{s}_{i}")
            b.edge(f"x^{s}_{i}", f"u^{s}_{i}")
            b.edge(f"u^{s}_{i}", f"v^{s}_{i}")
    for j, clause in enumerate(F.clauses, start=1):
        b.vertex(f"c_{j}")
        for lit in clause:
            b.edge(f"c_{j}", _lit_vertex(lit))
    return b.finish()


def _hf_vertices(F: CnfFormula) -> list[str]:
    names = []
    for i in range(1, F.num_vars + 1):
        names += [f"x_{i}", f"y'_{i}", f"y''_{i}", f"z'_{i},1", f"z'_{i},2",
                  f"z''_{i},1", f"z''_{i},2", f"x^0_{i}", f"x^1_{i}"]
    for j in range(1, F.num_clauses + 1):
        names += [f"c_{j}", f"d_{j}"]
    return names


def _hf_edges(F: CnfFormula) -> list[tuple[str, str]]:
    edges = []
    for i in range(1, F.num_vars + 1):
        edges += [(f"x_{i}", f"y'_{i}"), (f"x_{i}", f"y''_{i}"),
                  (f"y'_{i}", f"z'_{i},1"), (f"y'_{i}", f"z'_{i},2"),
                  (f"y''_{i}", f"z''_{i},1"), (f"y''_{i}", f"z''_{i},2"),
                  (f"x_{i}", f"x^0_{i}"), (f"x_{i}", f"x^1_{i}")]
    for j, clause in enumerate(F.clauses, start=1):
        for twin in ("c", "d"):
            edges += [(f"{twin}_{j}", _lit_vertex(lit)) for lit in clause]
    return edges


def _copy(name: str, side: int) -> str:
    return f"({name},{side})"


def build_hf_star(F: CnfFormula) -> tuple[Multigraph, GadgetMap]:
    """The odd-caterpillar gadget graph: ``18k + 4l`` vertices, ``18k + 12l`` edges.

    Two copies of a trimmed variable gadget with twinned clause vertices,
    joined by one edge between the two copies of every literal vertex.
    """
    b = _Builder()
    base_v, base_e = _hf_vertices(F), _hf_edges(F)
    for side in (1, 2):
        for name in base_v:
            b.vertex(_copy(name, side))
    for side in (1, 2):
        for x, y in base_e:
            b.edge(_copy(x, side), _copy(y, side))
    for i in range(1, F.num_vars + 1):
        for s in (0, 1):
            b.edge(_copy(f"x^{s}_{i}", 1), _copy(f"x^{s}_{i}", 2))
    return b.finish()


class _EdgeLookup:
    def __init__(self, G: Multigraph, gm: GadgetMap):
        self.gm = gm
        self.first: dict[frozenset, int] = {}
        for e, (u, v) in enumerate(G.edges):
            self.first.setdefault(frozenset((u, v)), e)

    def __call__(self, a: str, b: str) -> int:
        return self.first[frozenset((self.gm[a], self.gm[b]))]


def _check_assignment(F: CnfFormula, phi: Sequence[bool]) -> None:
    if not F.has_distinct_variables():
        raise ValueError("certificates need clauses over three distinct variables")
    if not F.satisfied_by(phi):
        raise ValueError("the assignment does not satisfy the formula")


def _witness_literals(F: CnfFormula, phi: Sequence[bool]) -> list[Lit]:
    """Per clause, the satisfied literal with the smallest variable index."""
    return [min((lit for lit in c if lit.value(phi)), key=lambda lit: lit.var) for c in F.clauses]


def ecf_certificate_from_assignment(F: CnfFormula, phi: Sequence[bool]) -> frozenset[int]:
    """An even caterpillar factor of the even gadget graph built from a satisfying assignment.

    The component of ``x_i`` has spine ``y'_i x_i y''_i`` and takes the literal
    vertex of the false literal, whose pendant edge ``u v`` becomes a K2.
    Each clause is attached to one true literal vertex; that vertex's star is
    fixed up to even degree by ``x u``, and ``u v`` closes it, or the path
    ``x u v`` is used when nothing is attached.
    """
    _check_assignment(F, phi)
    G, gm = build_gf_star(F)
    e = _EdgeLookup(G, gm)
    S: list[int] = []
    marks: dict[int, list[int]] = {}
    for j, lit in enumerate(_witness_literals(F, phi), start=1):
        marks.setdefault(lit.var, []).append(e(f"c_{j}", _lit_vertex(lit)))
    for var in range(F.num_vars):
        i = var + 1
        inside = 0 if phi[var] else 1  # the false literal joins the x_i component
        free = 1 - inside
        S += [e(f"x_{i}", f"y_{i}"), e(f"x_{i}", f"y'_{i}"), e(f"x_{i}", f"y''_{i}")]
        S += [e(f"y'_{i}", f"z'_{i},{t}") for t in (1, 2, 3)]
        S += [e(f"y''_{i}", f"z''_{i},{t}") for t in (1, 2, 3)]
        S += [e(f"x_{i}", f"x^{inside}_{i}"), e(f"u^{inside}_{i}", f"v^{inside}_{i}")]
        star = marks.get(var, [])
        S += star
        if len(star) % 2 == 0 and star:
            S.append(e(f"u^{free}_{i}", f"v^{free}_{i}"))
        else:
            S += [e(f"x^{free}_{i}", f"u^{free}_{i}"), e(f"u^{free}_{i}", f"v^{free}_{i}")]
    return frozenset(S)


def ocf_certificate_from_assignment(F: CnfFormula, phi: Sequence[bool]) -> frozenset[int]:
    """An odd caterpillar factor of the odd gadget graph built from a satisfying assignment.

    Every clause pair ``c_j, d_j`` hangs from one true literal vertex, which
    is also joined to its twin in the other copy.  A variable carrying no
    clause uses the cross edge of ``x^1``.  The factor is mirrored into copy 2.
    """
    _check_assignment(F, phi)
    G, gm = build_hf_star(F)
    e = _EdgeLookup(G, gm)
    witness = _witness_literals(F, phi)
    marked_side = {var: 1 for var in range(F.num_vars)}
    for lit in witness:
        marked_side[lit.var] = int(lit.positive)
    one_side: list[tuple[str, str]] = []
    for var in range(F.num_vars):
        i = var + 1
        inside = 1 - marked_side[var]
        one_side += [(f"x_{i}", f"y'_{i}"), (f"x_{i}", f"y''_{i}"),
                     (f"y'_{i}", f"z'_{i},1"), (f"y'_{i}", f"z'_{i},2"),
                     (f"y''_{i}", f"z''_{i},1"), (f"y''_{i}", f"z''_{i},2"),
                     (f"x_{i}", f"x^{inside}_{i}")]
    for j, lit in enumerate(witness, start=1):
        one_side += [(f"c_{j}", _lit_vertex(lit)), (f"d_{j}", _lit_vertex(lit))]
    S = {e(_copy(a, side), _copy(b, side)) for a, b in one_side for side in (1, 2)}
    for var in range(F.num_vars):
        name = f"x^{marked_side[var]}_{var + 1}"
        S.add(e(_copy(name, 1), _copy(name, 2)))
    return frozenset(S)


def assignment_from_factor(F: CnfFormula, kind: str, S: Iterable[int]) -> tuple[bool, ...]:
    """Read a truth assignment off a caterpillar factor of a gadget graph.

    ``kind="ecf"``: X_i is true iff ``x^0_i`` lies in the component of ``x_i``.
    ``kind="ocf"``: X_i is true iff ``(x^0_i,1)`` is the leaf of ``(x_i,1)``
    among the two literal vertices.
    """
    if kind == "ecf":
        G, gm = build_gf_star(F)
        parity = "even"
    elif kind == "ocf":
        G, gm = build_hf_star(F)
        parity = "odd"
    else:
        raise ValueError(f"kind must be 'ecf' or 'ocf', not {kind!r}")
    S = check_edge_set(G, S)
    defect = caterpillar_defect(G, S, parity)
    if defect is not None:
        raise ValueError(f"not an {parity} caterpillar factor: {defect}")
    phi = []
    if kind == "ecf":
        label = components(G, S).label
        for i in range(1, F.num_vars + 1):
            here = [label[gm[f"x^{s}_{i}"]] == label[gm[f"x_{i}"]] for s in (0, 1)]
            if here[0] == here[1]:
                raise ValueError(f"x_{i} component holds {sum(here)} literal vertices, expected 1")
            phi.append(here[0])
    else:
        nbrs: dict[int, set[int]] = {}
        for eid in S:
            u, v = G.edges[eid]
            nbrs.setdefault(u, set()).add(v)
            nbrs.setdefault(v, set()).add(u)
        for i in range(1, F.num_vars + 1):
            x = gm[_copy(f"x_{i}", 1)]
            here = [gm[_copy(f"x^{s}_{i}", 1)] in nbrs.get(x, ()) for s in (0, 1)]
            if here[0] == here[1]:
                raise ValueError(f"(x_{i},1) has {sum(here)} literal neighbours in the factor, expected 1")
            phi.append(here[0])
    return tuple(phi)


def render_name_map(gm: GadgetMap) -> str:
    """One ``name id`` line per vertex."""
    return "".join(f"{name} {i}\n" for i, name in enumerate(gm.names))
