"""Exhaustive checks of the two extremal statements at small sizes."""

from cliquemax.verify import lemma_t3_case_split, scan_t3_case_split, verify_prop_range, verify_theorem_range
from cliquemax.graph import extremal_cliques


def show(r):
    print(f"  {r.parameters}: predicted {r.predicted_value}, observed {r.observed_max}, "
          f"{r.uniqueness_class}, {r.witness_count} extremal classes, {r.graphs_examined} graphs")


print("independent t-sets, 8 vertices, minimum degree >= 3:")
for r in verify_theorem_range(8, 3, range(3, 6)):
    show(r)

print("t-cliques, maximum degree <= 4, 8 vertices (b = 3):")
for r in verify_prop_range(4, 3, range(3, 6)):
    show(r)

print("t = 2 lies outside the theorem; the verifier shows why:")
show(verify_theorem_range(6, 2, [2])[0])

print("case split on K5 + K3:", lemma_t3_case_split(extremal_cliques(1, 4, 3), 3).case)
print("case split over the whole (Delta, b) = (4, 2) class:", scan_t3_case_split(4, 2))
