"""
Representations from a vertex cover
===================================

Given a minimal vertex cover of size t, the cubicity construction needs
t - 1 + ceil(log2(n - t)) unit interval dims and the boxicity construction
needs floor(t/2) + 1 interval dims.  Stars, C4 and Roberts graphs show both
constructions meeting the exact values.
"""

from boxicity.box import box_bound, build_box_representation
from boxicity.combinatorics import approx_vertex_cover, min_vertex_cover
from boxicity.cub import build_cub_representation, cub_bound
from boxicity.graph import cycle, random_graph, roberts, star
from boxicity.intervals import verify
from boxicity.oracle import exact_boxicity, exact_cubicity

print("star(n): cub-vc dims against the bound")
for n in range(3, 10):
    g = star(n)
    c = min_vertex_cover(g)
    rep = build_cub_representation(g, c)
    print(f"  n={n} t={len(c)} dims={len(rep)} bound={cub_bound(n, len(c))} ok={verify(rep).ok}")
print("  exact cubicity of star(5):", exact_cubicity(star(5)).value)

g = cycle(4)
rep = build_box_representation(g, min_vertex_cover(g))
print("\nC4 box-vc:", len(rep), "dims", rep.labels, "exact:", exact_boxicity(g).value)

print("\nRoberts graphs: cover n - 2, boxicity n/2")
for n in (4, 6, 8):
    g = roberts(n)
    c = min_vertex_cover(g)
    rep = build_box_representation(g, c)
    print(f"  n={n} t={len(c)} box-vc={len(rep)} bound={box_bound(len(c))} exact={exact_boxicity(g).value}")
    for label, dim in zip(rep.labels, rep.dims):
        print(f"    {label:10s} {dim.intervals}")

# Larger graphs can use the 2-approximate cover; the bound is then in its size.
g = random_graph(40, 0.15, seed=7)
c = approx_vertex_cover(g)
cub_rep = build_cub_representation(g, c)
box_rep = build_box_representation(g, c)
print(f"\nrandom n=40: approx t={len(c)} cub-vc={len(cub_rep)} box-vc={len(box_rep)}",
      "verified:", verify(cub_rep, cap=40).ok and verify(box_rep, cap=40).ok)
