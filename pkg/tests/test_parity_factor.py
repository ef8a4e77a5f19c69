import itertools

import pytest
from hypothesis import given, settings, strategies as st

from graphfactors.graph import Cycle, Multigraph, cut_edges_on_path, degrees_in, iter_perfect_matchings, two_factor_cycles
from graphfactors.oracle import SearchLimitError, brute_x_parity_factor, random_cubic
from graphfactors.parity_factor import (ConstructionError, b_factor_via_slack,
                                        binary_degree_sequence, binary_degree_sequence_of,
                                        detect_obstructions, find_slack_connected_factor,
                                        has_strong_parity_property, is_x_parity_factor,
                                        select_disjoint_paths, spp_counterexample, x_parity_factor,
                                        x_parity_factor_cubic, x_parity_factor_slack,
                                        x_parity_factor_triangle)

from _graphs import (BOWTIE, C4, CUBE, K3, K33, K4, P3, PETERSEN, PRISM, bridged_cubic,
                     connected_graphs_up_to, cycle, degrees_of, even_subsets, path,
                     raw_has_x_parity_factor, raw_is_x_parity_factor)


def test_binary_degree_sequences():
    assert binary_degree_sequence(K4) == (1, 1, 1, 1)
    assert binary_degree_sequence(C4) == (0, 0, 0, 0)
    assert binary_degree_sequence(P3) == (1, 0, 1)
    assert binary_degree_sequence_of(K4, {0}) == (1, 1, 0, 0)


def test_verifier_matches_raw_oracle():
    for G in (K4, C4, P3, BOWTIE):
        for X in even_subsets(G.n):
            for r in range(G.m + 1):
                for S in itertools.combinations(range(G.m), r):
                    assert is_x_parity_factor(G, X, S) == raw_is_x_parity_factor(G, X, S)


# slack route

HAM_K4 = frozenset({0, 3, 5})  # 0-1-2-3


def test_b_factor_trivial_target():
    assert b_factor_via_slack(K4, HAM_K4, (1, 1, 1, 1)) == frozenset(range(6))


def test_b_factor_removes_the_pair_edge():
    F = b_factor_via_slack(K4, HAM_K4, (1, 1, 0, 0))
    assert F == frozenset(range(6)) - {5}
    assert degrees_of(K4, F) == [3, 3, 2, 2]


def test_b_factor_on_doubled_cycle():
    G = Multigraph.from_edges(4, [(i, (i + 1) % 4) for i in range(4)] * 2)
    F = b_factor_via_slack(G, {0, 1, 2, 3}, (0, 0, 0, 0))
    assert raw_is_x_parity_factor(G, (), F)


def test_b_factor_preconditions():
    with pytest.raises(ValueError):
        b_factor_via_slack(K4, range(6), (1, 1, 1, 1))  # no slack
    with pytest.raises(ValueError):
        b_factor_via_slack(K4, {0, 5}, (1, 1, 1, 1))  # not connected
    with pytest.raises(ValueError):
        b_factor_via_slack(K4, HAM_K4, (1, 0, 0, 0))  # odd number of ones


def test_slack_factor_examples():
    assert find_slack_connected_factor(K4) == HAM_K4
    assert find_slack_connected_factor(C4) is None
    assert find_slack_connected_factor(P3) is None


def _has_slack(G, H):
    d = degrees_in(G, H)
    return all(1 <= d[v] < G.degree(v) for v in range(G.n)) and len(H) >= G.n - 1


def test_slack_factor_on_min_degree_four():
    from _graphs import from_nx
    import networkx as nx
    for g in (nx.complete_graph(5), nx.complete_graph(7), nx.circulant_graph(9, [1, 2]),
              nx.circulant_graph(10, [1, 3])):
        G = from_nx(g)
        H = find_slack_connected_factor(G)
        assert H is not None and _has_slack(G, H)


def test_slack_none_is_exact_for_small_graphs():
    # every connected graph up to 6 vertices: None iff no spanning tree has slack
    import networkx as nx
    from _graphs import to_nx
    for G in connected_graphs_up_to(6):
        if G.n < 2:
            continue
        H = find_slack_connected_factor(G)
        g = nx.Graph(to_nx(G))
        exists = any(all(t.degree(v) < G.degree(v) for v in t)
                     for t in nx.SpanningTreeIterator(g))
        assert (H is not None) == exists
        if H is not None:
            assert _has_slack(G, H)


@pytest.mark.parametrize("G", [K4, PRISM, K33, PETERSEN, CUBE])
def test_slack_route_on_every_x(G):
    for X in itertools.islice(even_subsets(G.n), 64):
        assert is_x_parity_factor(G, X, x_parity_factor_slack(G, X))


# triangle switches

def test_triangle_examples():
    F = x_parity_factor_triangle(K3, {0, 1})
    assert F == frozenset({1, 2})
    assert degrees_of(K3, F) == [1, 1, 2]
    assert x_parity_factor_triangle(K3, ()) == frozenset(range(3))
    assert raw_is_x_parity_factor(BOWTIE, (), x_parity_factor_triangle(BOWTIE, ()))


def test_triangle_history_strictly_decreases():
    for G in connected_graphs_up_to(6):
        if G.n < 2 or G.m < G.n:
            continue
        for X in even_subsets(G.n):
            hist: list[int] = []
            try:
                x_parity_factor_triangle(G, X, history=hist)
            except ValueError:
                break
            assert all(a > b for a, b in zip(hist, hist[1:]))


def test_triangle_on_multigraphs():
    # parallel pairs count as 2-cycles; loops are allowed in G
    G = Multigraph.from_edges(3, [(0, 1), (0, 1), (1, 2), (1, 2), (2, 2)])
    for X in even_subsets(3):
        F = x_parity_factor_triangle(G, X)
        assert raw_is_x_parity_factor(G, X, F)


def test_triangle_precondition():
    with pytest.raises(ValueError):
        x_parity_factor_triangle(C4, ())


# cubic construction

def test_select_paths_single_cycle():
    c = Cycle((0, 1, 2, 3), (0, 1, 2, 3))
    paths = select_disjoint_paths([c], [], {0, 2})
    assert [p.vertices for p in paths] == [(0, 1, 2)]
    assert select_disjoint_paths([c], [], set()) == []


def test_select_paths_uses_the_connector():
    cycles = [Cycle((0, 1, 2), (0, 1, 2)), Cycle((3, 4, 5), (3, 4, 5))]
    paths = select_disjoint_paths(cycles, [(6, 0, 3)], {0, 3})
    assert [(p.vertices, p.edges) for p in paths] == [((0, 3), (6,))]


def test_select_paths_rejects_odd_z():
    with pytest.raises(ValueError):
        select_disjoint_paths([Cycle((0, 1, 2), (0, 1, 2))], [], {0})


def test_cubic_k4_example():
    F = x_parity_factor_cubic(K4, {0, 1})
    assert degrees_of(K4, F) == [1, 3, 2, 2]


def test_cubic_all_odd():
    assert x_parity_factor_cubic(PRISM, range(6)) == frozenset(range(9))


def test_cubic_prism_adjacent_pair():
    assert is_x_parity_factor(PRISM, {0, 1}, x_parity_factor_cubic(PRISM, {0, 1}))


@pytest.mark.parametrize("G", [K4, PRISM, K33])
def test_cubic_degree_trichotomy(G):
    for X in even_subsets(G.n):
        F = x_parity_factor_cubic(G, X)
        for v, d in enumerate(degrees_of(G, F)):
            assert d == 2 if v not in X else d in (1, 3)


def test_every_matching_and_z_on_small_cubic_graphs_has_a_path_system():
    # with exact per-cycle selection, the first connector set always works here
    for G in (K4, PRISM, K33):
        for M in iter_perfect_matchings(G):
            cycles = two_factor_cycles(G, M)
            where = {v: i for i, c in enumerate(cycles) for v in c.vertices}
            conns = [(e, *G.edges[e]) for e in sorted(M) if where[G.edges[e][0]] != where[G.edges[e][1]]]
            if len(cycles) == 2:
                conns = conns[:1]
            for Z in even_subsets(G.n):
                paths = select_disjoint_paths(cycles, conns, Z)
                ends = sorted(v for p in paths for v in (p.vertices[0], p.vertices[-1]))
                assert ends == sorted(Z)
                inner = [v for p in paths for v in p.vertices[1:-1]]
                assert not set(inner) & set(Z)
                assert len(set(inner) | set(ends)) == len(inner) + len(ends)


def test_cubic_counterexample_to_the_fixed_selection():
    G, ix = bridged_cubic()
    Z = {ix[s] for s in ("a", "b", "c", "d", "r1", "r2")}
    X = set(range(G.n)) - Z
    with pytest.raises(ConstructionError):
        x_parity_factor_cubic(G, X)
    F = brute_x_parity_factor(G, X)
    assert F is not None and raw_is_x_parity_factor(G, X, F)
    # the dispatcher falls back and still answers
    assert is_x_parity_factor(G, X, x_parity_factor(G, X))


def test_cubic_preconditions():
    with pytest.raises(ValueError):
        x_parity_factor_cubic(C4, ())
    spider = Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(ValueError):
        x_parity_factor_cubic(spider, ())


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([8, 10, 12, 14, 16]), st.integers(0, 10**6), st.randoms(use_true_random=False))
def test_cubic_on_random_cubic_graphs(n, seed, rnd):
    G = random_cubic(n, seed)
    X = [v for v in range(n) if rnd.random() < 0.5]
    if len(X) % 2:
        X.pop()
    if not cut_edges_on_path(G):
        return
    try:
        F = x_parity_factor_cubic(G, X)
    except ConstructionError:
        # the construction may fail; existence must still hold
        assert brute_x_parity_factor(G, X, max_edges=None) is not None
        return
    assert raw_is_x_parity_factor(G, X, F)


# strong parity property

def test_spp_examples():
    assert has_strong_parity_property(K4)
    assert has_strong_parity_property(K3)
    assert not has_strong_parity_property(P3)
    assert not has_strong_parity_property(C4)
    assert spp_counterexample(P3) == frozenset()


def test_spp_sweep_agrees_with_raw_oracle():
    for G in connected_graphs_up_to(5):
        raw = all(raw_has_x_parity_factor(G, X) for X in even_subsets(G.n))
        assert has_strong_parity_property(G) == raw


def test_spp_guard():
    with pytest.raises(SearchLimitError):
        has_strong_parity_property(cycle(15))


def test_obstruction_examples():
    assert detect_obstructions(P3).of_kind("i") == [(0,), (2,)]
    assert len(detect_obstructions(C4).of_kind("ii")) == 4
    assert not detect_obstructions(K4)


def test_obstruction_iii():
    # square 0-1-2-3 with 1 bridged to a triangle at 4
    G = Multigraph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 6), (6, 4)])
    rep = detect_obstructions(G)
    assert rep.of_kind("iii") == [(0, 1, 2, 4)]
    assert rep.of_kind("ii") == [(0, 3, 2)]
    assert not has_strong_parity_property(G)


def test_obstruction_iii_needs_order_four():
    # same shape but v2's side is a triangle: too small
    G = Multigraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 4), (4, 5), (5, 3)])
    assert detect_obstructions(G).of_kind("iii") == []


def test_obstructions_are_sound():
    for G in connected_graphs_up_to(6):
        if detect_obstructions(G):
            assert not has_strong_parity_property(G)


# dispatcher

@settings(max_examples=100, deadline=None)
@given(st.sampled_from([g for g in connected_graphs_up_to(5) if g.n >= 2]), st.data())
def test_auto_agrees_with_raw_existence(G, data):
    X = data.draw(st.sampled_from(list(even_subsets(G.n))))
    F = x_parity_factor(G, X)
    if F is None:
        assert not raw_has_x_parity_factor(G, X)
    else:
        assert raw_is_x_parity_factor(G, X, F)


def test_unknown_method():
    with pytest.raises(ValueError):
        x_parity_factor(K4, (), method="magic")


def test_paths():
    assert x_parity_factor(path(4), {0, 3}) == frozenset({0, 1, 2})
    assert x_parity_factor(path(4), {0, 1}) is None  # the leaf 3 cannot be even and positive
    assert x_parity_factor(path(2), {0, 1}) == frozenset({0})
