"""Clique and independent-set counts, and the triangle/complement identity."""

from cliquemax import graph as G
from cliquemax.counting import (
    clique_counts, clique_profile, count_independent_sets, k3_upper_bound, triangle_complement_identity,
)

g = G.disjoint_union(G.complete(5), G.complete(3))
print("K5 + K3 clique counts k_0..:", clique_counts(g))
print("triangles through each vertex:", clique_profile(g, 3).per_vertex)

k24 = G.complete_bipartite(2, 4)
print("independent 3-sets in K_{2,4}:", count_independent_sets(k24, 3))

# The identity relates triangles of G and of its complement to the degrees.
for name, h in [("C5", G.cycle(5)), ("K4", G.complete(4)), ("P6", G.path(6))]:
    lhs, rhs, holds = triangle_complement_identity(h)
    print(f"{name}: 2(k3 + k3 of complement) = {lhs}, degree expression = {rhs}, holds = {holds}, "
          f"k3 bound = {k3_upper_bound(h)}")
