import itertools

import pytest
from hypothesis import given, settings, strategies as st

from graphfactors.caterpillar import caterpillar_defect, verify_caterpillar_factor
from graphfactors.cnf import CnfFormatError, CnfFormula, Lit, parse_dimacs, render_dimacs
from graphfactors.graph import components, is_bipartite
from graphfactors.oracle import brute_caterpillar_factor, dpll_sat, random_cnf
from graphfactors.reductions import (assignment_from_factor, build_gf_star, build_hf_star,
                                     ecf_certificate_from_assignment, ocf_certificate_from_assignment,
                                     render_name_map)

FIG = parse_dimacs("p cnf 3 1\n1 -2 3 0\n")


# DIMACS

def test_parse_examples():
    F = parse_dimacs("p cnf 1 1\n1 1 1 0\n")
    assert (F.num_vars, F.num_clauses) == (1, 1)
    assert FIG.clauses == ((Lit(0, True), Lit(1, False), Lit(2, True)),)


def test_parse_comments_and_layout():
    F = parse_dimacs("c hi\np cnf 4 2\n1 -2\n3 0 -4 2 1\n0\n%\nwhatever")
    assert [[l.dimacs() for l in c] for c in F.clauses] == [[1, -2, 3], [-4, 2, 1]]


@pytest.mark.parametrize("text", [
    "p cnf 2 1\n1 2 0\n",
    "p cnf 2 1\n1 2 3 0\n",
    "p cnf x 1\n1 1 1 0\n",
    "1 2 3 0\n",
    "p cnf 3 2\n1 2 3 0\n",
    "p cnf 3 1\n1 2 3\n",
    "p dnf 3 1\n1 2 3 0\n",
])
def test_parse_errors(text):
    with pytest.raises(CnfFormatError):
        parse_dimacs(text)


def test_distinct_variable_switch():
    text = "p cnf 1 1\n1 1 -1 0\n"
    assert not parse_dimacs(text).has_distinct_variables()
    with pytest.raises(CnfFormatError):
        parse_dimacs(text, require_distinct=True)


@given(st.integers(3, 8), st.integers(0, 10), st.integers(0, 2**32 - 1))
def test_dimacs_round_trip(k, l, seed):
    F = random_cnf(k, l, seed)
    assert parse_dimacs(render_dimacs(F)) == F


# gadget graphs

def test_gf_counts():
    G, gm = build_gf_star(FIG)
    assert (G.n, G.m) == (49, 48)
    G, _ = build_gf_star(CnfFormula(1, ()))
    assert (G.n, G.m) == (16, 15)


def test_hf_counts():
    G, _ = build_hf_star(parse_dimacs("p cnf 1 1\n1 1 1 0\n"))
    assert (G.n, G.m) == (22, 30)
    G, _ = build_hf_star(CnfFormula.from_dimacs_clauses(2, [(1, 2, 1), (-1, 2, -2), (1, 1, 1)]))
    assert (G.n, G.m) == (48, 72)


@pytest.mark.parametrize("seed", range(30))
def test_count_formulas_and_bipartite(seed):
    k, l = 3 + seed % 5, seed % 9
    F = random_cnf(k, l, seed)
    G, gm = build_gf_star(F)
    H, hm = build_hf_star(F)
    assert (G.n, G.m) == (16 * k + l, 15 * k + 3 * l)
    assert (H.n, H.m) == (18 * k + 4 * l, 18 * k + 12 * l)
    assert is_bipartite(G) and is_bipartite(H)
    assert len(gm) == G.n and len(hm) == H.n


def test_clause_wiring():
    G, gm = build_gf_star(FIG)
    nb = sorted(gm.names[w] for _, w in G.incidence[gm["c_1"]])
    assert nb == ["x^0_2", "x^1_1", "x^1_3"]


def test_copies_mirror_each_other():
    F = random_cnf(4, 3, 1)
    H, hm = build_hf_star(F)
    swap = {}
    for name, i in hm.ids.items():
        w, side = name[1:-1].rsplit(",", 1)
        swap[i] = hm[f"({w},{3 - int(side)})"]
    edges = sorted(tuple(sorted(e)) for e in H.edges)
    assert sorted(tuple(sorted((swap[u], swap[v]))) for u, v in H.edges) == edges


def test_twins_share_neighbourhoods():
    H, hm = build_hf_star(FIG)
    for side in (1, 2):
        nc = sorted(w for _, w in H.incidence[hm[f"(c_1,{side})"]])
        nd = sorted(w for _, w in H.incidence[hm[f"(d_1,{side})"]])
        assert nc == nd


def test_name_map_rendering():
    _, gm = build_gf_star(CnfFormula(1, ()))
    lines = render_name_map(gm).splitlines()
    assert lines[0] == "x_1 0" and len(lines) == 16


# certificates

def test_ecf_certificate_fig_formula():
    S = ecf_certificate_from_assignment(FIG, (True, True, True))
    G, _ = build_gf_star(FIG)
    assert verify_caterpillar_factor(G, S, "even") is not None


def test_ecf_certificate_single_variable():
    G, gm = build_gf_star(CnfFormula(1, ()))
    S = ecf_certificate_from_assignment(CnfFormula(1, ()), (True,))
    assert caterpillar_defect(G, S, "even") is None
    part = components(G, S)
    lab = part.label
    assert lab[gm["x^0_1"]] == lab[gm["x_1"]]
    assert part.orders()[lab[gm["u^0_1"]]] == 2
    trio = {gm["x^1_1"], gm["u^1_1"], gm["v^1_1"]}
    assert {v for v in range(G.n) if lab[v] == lab[gm["x^1_1"]]} == trio


def test_ocf_certificate_and_unused_variable():
    F = CnfFormula.from_dimacs_clauses(4, [(1, -2, 3)])
    H, hm = build_hf_star(F)
    S = ocf_certificate_from_assignment(F, (True, True, True, False))
    assert caterpillar_defect(H, S, "odd") is None
    lab = components(H, S).label
    cross = [e for e, (u, v) in enumerate(H.edges) if {u, v} == {hm["(x^1_4,1)"], hm["(x^1_4,2)"]}]
    assert cross[0] in S
    assert lab[hm["(x_4,1)"]] == lab[hm["(x^0_4,1)"]]


def test_certificates_reject_bad_assignments():
    with pytest.raises(ValueError):
        ecf_certificate_from_assignment(FIG, (False, True, False))
    with pytest.raises(ValueError):
        ocf_certificate_from_assignment(FIG, (False, True, False))
    with pytest.raises(ValueError):
        ecf_certificate_from_assignment(FIG, (True,))


def test_certificates_reject_repeated_variables():
    F = parse_dimacs("p cnf 1 1\n1 1 1 0\n")
    with pytest.raises(ValueError):
        ecf_certificate_from_assignment(F, (True,))


def test_assignment_from_factor_rejects_non_factors():
    with pytest.raises(ValueError):
        assignment_from_factor(FIG, "ecf", [0])
    with pytest.raises(ValueError):
        assignment_from_factor(FIG, "ocf", [0])
    with pytest.raises(ValueError):
        assignment_from_factor(FIG, "xyz", [])


def test_round_trip_every_satisfying_assignment():
    F = CnfFormula.from_dimacs_clauses(4, [(1, -2, 3), (-1, 2, 4), (-3, -4, 2)])
    for phi in itertools.product((False, True), repeat=4):
        if not F.satisfied_by(phi):
            continue
        for kind, build in (("ecf", ecf_certificate_from_assignment), ("ocf", ocf_certificate_from_assignment)):
            back = assignment_from_factor(F, kind, build(F, phi))
            assert F.satisfied_by(back)


@pytest.mark.parametrize("seed", range(12))
def test_random_satisfiable_round_trips(seed):
    F = random_cnf(3 + seed % 4, 2 + seed % 7, seed)
    phi = dpll_sat(F)
    if phi is None:
        pytest.skip("unsatisfiable draw")
    for kind, build in (("ecf", ecf_certificate_from_assignment), ("ocf", ocf_certificate_from_assignment)):
        assert F.satisfied_by(assignment_from_factor(F, kind, build(F, phi)))


def test_oracle_found_factors_decode_to_models():
    G, _ = build_gf_star(FIG)
    S = brute_caterpillar_factor(G, "even", max_edges=None)
    assert S is not None and FIG.satisfied_by(assignment_from_factor(FIG, "ecf", S))
    H, _ = build_hf_star(FIG)
    S = brute_caterpillar_factor(H, "odd", max_edges=None)
    assert S is not None and FIG.satisfied_by(assignment_from_factor(FIG, "ocf", S))


def test_contradiction_has_no_factors():
    F = parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")
    assert dpll_sat(F) is None
    assert brute_caterpillar_factor(build_gf_star(F)[0], "even", max_edges=None) is None
    assert brute_caterpillar_factor(build_hf_star(F)[0], "odd", max_edges=None) is None
