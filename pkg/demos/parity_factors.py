"""
Parity factors on small graphs
==============================

Spanning subgraphs whose degrees are odd exactly on a chosen vertex set X,
first without and then with the requirement that every degree is positive.
"""

from graphfactors import Multigraph, parse_graph
from graphfactors.graph import degrees_in
from graphfactors.parity import local_minimize, parity_spanning_subgraph
from graphfactors.parity_factor import (ConstructionError, detect_obstructions,
                                        has_strong_parity_property, x_parity_factor,
                                        x_parity_factor_cubic, x_parity_factor_slack,
                                        x_parity_factor_triangle)

# K4 from the text format: "n m" then one edge per line
K4 = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")

# degree 0 is allowed here
H = parity_spanning_subgraph(K4, {0, 3})
print("parity subgraph for X={0,3}:", sorted(H), "degrees", degrees_in(K4, H))

# a 4-cycle: the long way round gets flipped to the short way
C4 = Multigraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print("minimized:", sorted(local_minimize(C4, {0, 1}, {1, 2, 3})))

# now every degree must be >= 1; three constructions, one answer each
for name, build in (("slack", x_parity_factor_slack), ("triangle", x_parity_factor_triangle),
                    ("cubic", x_parity_factor_cubic)):
    F = build(K4, {0, 1})
    print(f"{name:>8}: edges {sorted(F)} degrees {degrees_in(K4, F)}")

# the Petersen graph: outer 5-cycle, inner pentagram, spokes
outer = [(i, (i + 1) % 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
spokes = [(i, i + 5) for i in range(5)]
P = Multigraph.from_edges(10, outer + inner + spokes)
F = x_parity_factor_cubic(P, {0, 2, 6, 9})
print("Petersen, X={0,2,6,9}:", degrees_in(P, F))

# not every graph has the property; local patterns explain why
P3 = Multigraph.from_edges(3, [(0, 1), (1, 2)])
print("K4 has it:", has_strong_parity_property(K4))
print("C4 has it:", has_strong_parity_property(C4), detect_obstructions(C4).of_kind("ii")[:2])
print("P3 has it:", has_strong_parity_property(P3), detect_obstructions(P3).witnesses)

# a cubic graph where the per-cycle arc selection runs out of options
names = "a b c d a1 p1 q1 r1 s1 a2 p2 q2 r2 s2".split()
ix = {s: i for i, s in enumerate(names)}
E = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "d"), ("a", "a1"), ("c", "a2")]
for t in "12":
    E += [(f"a{t}", f"p{t}"), (f"a{t}", f"q{t}"), (f"p{t}", f"r{t}"), (f"p{t}", f"s{t}"),
          (f"q{t}", f"r{t}"), (f"q{t}", f"s{t}"), (f"r{t}", f"s{t}")]
B = Multigraph.from_edges(14, [(ix[u], ix[v]) for u, v in E])
X = set(range(14)) - {ix[s] for s in ("a", "b", "c", "d", "r1", "r2")}
try:
    x_parity_factor_cubic(B, X)
except ConstructionError as exc:
    print("cubic construction:", exc)
F = x_parity_factor(B, X)  # falls back to another route
print("a factor exists anyway:", degrees_in(B, F))
