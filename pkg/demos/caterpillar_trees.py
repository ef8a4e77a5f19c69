"""
Caterpillar factors of trees
============================

Even and odd caterpillar factors, decided in linear time and checked
against exhaustive search.
"""

import time

from graphfactors import Multigraph, ecf_tree_solve, ocf_tree_solve, verify_caterpillar_factor
from graphfactors.ecf import ecf_edge_labels, label_names
from graphfactors.ocf import marked_edges, oddness_profile, star_condition_holds
from graphfactors.oracle import brute_caterpillar_factor, random_tree

claw = Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
P5 = Multigraph.from_edges(5, [(i, i + 1) for i in range(4)])

# even: the claw fails, a path works
print("claw, even:", ecf_tree_solve(claw))
S = ecf_tree_solve(P5)
dec = verify_caterpillar_factor(P5, S, "even")
print("P5, even:", sorted(S), [c.vertices for c in dec.components])

# the label sets behind the decision, hung from vertex 0
rt, labels = ecf_edge_labels(P5, root=0)
for v in rt.order[1:]:
    print(f"  edge {rt.parent[v]}-{v}: {sorted(label_names(labels[v]))}")

# odd: only edges splitting the tree into two odd halves can be used
print("claw, odd:", sorted(ocf_tree_solve(claw)))
tree = Multigraph.from_edges(10, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)])
print("three-branch tree oddness:", oddness_profile(tree).oddness)
print("marked:", sorted(marked_edges(tree)), "star condition:", star_condition_holds(tree))
print("odd factor:", ocf_tree_solve(tree), "search:", brute_caterpillar_factor(tree, "odd"))

# agreement with search on random trees
agree = sum((ecf_tree_solve(T) is None) == (brute_caterpillar_factor(T, "even") is None)
            for T in (random_tree(14, s) for s in range(200)))
print("even decisions agreeing with search:", agree, "/ 200")

# and the linear pass on a large tree
T = random_tree(10**6, 1)
t = time.perf_counter()
S = ecf_tree_solve(T)
print(f"n = 10^6: {'YES' if S else 'NO'} in {time.perf_counter() - t:.2f}s")
