"""
Bipartite graphs and crowns
===========================

A bipartite graph with sides n1 <= n2 (n1 >= 3) has boxicity at most
ceil(n1/2).  The crown graph on n vertices (K_{n/2,n/2} minus a perfect
matching) reaches ceil(n/4).
"""

from boxicity.box import bipartite_bound, build_bipartite_box_representation
from boxicity.graph import bipartition_of, complete_bipartite, crown, random_bipartite, Bipartition
from boxicity.intervals import verify
from boxicity.oracle import exact_boxicity

for n in (8, 12, 16):
    g = crown(n)
    bip = bipartition_of(g)
    rep = build_bipartite_box_representation(g, bip)
    line = f"crown({n}): dims={len(rep)} labels={rep.labels} verified={verify(rep, cap=n).ok}"
    if n == 8:
        line += f" exact={exact_boxicity(g).value}"
    print(line)

g = complete_bipartite(3, 3)
rep = build_bipartite_box_representation(g, bipartition_of(g))
print("K3,3 (odd side, cover route):", len(rep), "dims, bound", bipartite_bound(3, 3))

worst = 0
for seed in range(50):
    g = random_bipartite(6, 6, 0.5, seed)
    bip = Bipartition(frozenset(range(6)), frozenset(range(6, 12)))
    rep = build_bipartite_box_representation(g, bip)
    assert verify(rep).ok
    worst = max(worst, len(rep))
print("50 random 6+6 bipartite graphs: most dims used", worst, "of", bipartite_bound(6, 6))
