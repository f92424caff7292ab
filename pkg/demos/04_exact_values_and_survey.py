"""
Exact values and the exhaustive survey
======================================

For small graphs the oracle finds the least number of (unit) interval
supergraphs whose meet is the graph.  The survey runs it over one graph per
isomorphism class and checks every bound against it.
"""

from collections import Counter

from boxicity.combinatorics import check_chromatic_bound, matching_box_bound
from boxicity.graph import complete_bipartite, cycle, path, roberts, star
from boxicity.oracle import exact_boxicity, exact_cubicity, graphs_of_order, survey

for name, g in [("P4", path(4)), ("C4", cycle(4)), ("star(5)", star(5)), ("roberts(6)", roberts(6)), ("K3,3", complete_bipartite(3, 3))]:
    b, c = exact_boxicity(g), exact_cubicity(g)
    print(f"{name:11s} box={b.value} cub={c.value} minimal factors={b.factors}/{c.factors}")

print("\nboxicity distribution over the 1044 graphs on 7 vertices:")
print(" ", dict(sorted(Counter(exact_boxicity(g).value for g in graphs_of_order(7)).items())))

r = check_chromatic_bound(roberts(6), 3)
print("\nroberts(6): s =", r.slack, "bound =", r.bound, "chi =", r.chi_exact)
print("C4 matching bound:", matching_box_bound(cycle(4)))

for n in range(1, 7):
    report = survey(n)
    print(f"survey n={n}: {len(report.records)} classes, {len(report.violations)} violations")
print(survey(4).to_jsonl().splitlines()[-1])
