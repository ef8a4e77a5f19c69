"""
From 3-CNF to caterpillar factors
=================================

Each formula becomes a bipartite graph that has an even (odd) caterpillar
factor exactly when the formula is satisfiable.
"""

from graphfactors import parse_dimacs
from graphfactors.caterpillar import verify_caterpillar_factor
from graphfactors.oracle import brute_caterpillar_factor, dpll_sat
from graphfactors.reductions import (assignment_from_factor, build_gf_star, build_hf_star,
                                     ecf_certificate_from_assignment, ocf_certificate_from_assignment)

F = parse_dimacs("p cnf 3 1\n1 -2 3 0\n")
G, gm = build_gf_star(F)
H, hm = build_hf_star(F)
print("even gadget:", G.n, "vertices", G.m, "edges")
print("odd gadget:", H.n, "vertices", H.m, "edges")
print("clause vertex c_1 sees", sorted(gm.names[w] for _, w in G.incidence[gm["c_1"]]))

# satisfying assignment -> factor -> assignment
phi = dpll_sat(F)
S = ecf_certificate_from_assignment(F, phi)
dec = verify_caterpillar_factor(G, S, "even")
print("model", phi, "gives", len(dec), "even caterpillars; decodes to", assignment_from_factor(F, "ecf", S))
S = ocf_certificate_from_assignment(F, phi)
print("odd certificate decodes to", assignment_from_factor(F, "ocf", S))

# a contradiction has neither factor
U = parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")
print("contradiction, even:", brute_caterpillar_factor(build_gf_star(U)[0], "even", max_edges=None))
print("contradiction, odd:", brute_caterpillar_factor(build_hf_star(U)[0], "odd", max_edges=None))
