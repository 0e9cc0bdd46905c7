"""Recognizing the class: blocks, verdicts, and odd-cycle witnesses.

A graph belongs to the class when any two of its odd cycles share at most
one edge. Membership is decided block by block: every block must be
bipartite, K4, or a theta graph with one unit path and all other path
lengths even. A brute-force oracle double-checks each verdict.
"""

import json

from oddcycle import classify_graph, odd_overlap_witness, verify_witness_pair
from oddcycle.graphs import (
    complete_graph,
    cycle_graph,
    glue_at_vertex,
    theta_graph,
)

print("=== a theta graph with paths of lengths 1, 2, 4 ===")
theta = theta_graph([1, 2, 4])
cls = classify_graph(theta)
print(json.dumps(cls.to_json(), indent=2))
print("odd cycle lengths: 1+2 = 3 and 1+4 = 5; they share only the unit edge,")
print("so the oracle agrees:", odd_overlap_witness(theta) is None)

print("\n=== an odd length and an even length mixed: paths 1, 2, 3 ===")
bad = theta_graph([1, 2, 3])
cls = classify_graph(bad)
print("member:", cls.in_gstar)
c1, c2 = cls.witness
print("witness cycles (edge ids):", sorted(c1), "and", sorted(c2))
print("shared edges:", sorted(c1 & c2))
print("independently re-verified:", verify_witness_pair(bad, c1, c2))

print("\n=== gluing legal blocks keeps membership ===")
g = glue_at_vertex(cycle_graph(6), complete_graph(4), 0, 0)
g = glue_at_vertex(g, theta_graph([1, 4, 4]), 3, 0)
cls = classify_graph(g)
print("blocks:", [r.verdict for r in cls.per_block])
print("member:", cls.in_gstar, "| triangle-only subclass:", cls.in_g1)

print("\n=== the 5-clique is out: many overlapping odd cycles ===")
cls = classify_graph(complete_graph(5))
print("member:", cls.in_gstar, "witness:", [sorted(c) for c in cls.witness])
