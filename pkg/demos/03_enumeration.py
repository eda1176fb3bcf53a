"""Isomorph-free generation, canonical forms and graph6."""

import sys

from cliquemax import graph as G
from cliquemax.canon import canonical_form
from cliquemax.enumeration import EnumerationConfig, enumerate_graphs, run_task, split_tasks
from cliquemax.graph6 import graph6_encode, write_graph6_lines

for n in range(1, 8):
    print(f"n={n}: {sum(1 for _ in enumerate_graphs(EnumerationConfig(n)))} graphs up to isomorphism")

config = EnumerationConfig.max_degree(5, 2)
print("\nmaximum degree <= 2 on 5 vertices:")
write_graph6_lines(sys.stdout, enumerate_graphs(config))

print("\nC5 and its complement share a certificate:",
      canonical_form(G.cycle(5)) == canonical_form(G.complement(G.cycle(5))))

config = EnumerationConfig.min_degree(8, 3)
tasks = split_tasks(config, 4)
sizes = [sum(1 for _ in run_task(t)) for t in tasks]
print(f"\nmin degree >= 3 on 8 vertices: {sum(sizes)} graphs over {len(tasks)} independent tasks")
print("graph6 of K_{3,3}:", graph6_encode(G.complete_bipartite(3, 3)))
