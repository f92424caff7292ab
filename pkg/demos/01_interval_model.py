"""
Intervals, meets and recognition
================================

A graph has boxicity k when it is the meet (edge-set intersection) of k
interval graphs on the same vertices.  This script builds interval
assignments by hand, intersects them and checks the result.
"""

from boxicity.graph import add_edges, cycle, path, star
from boxicity.intervals import (
    IntervalAssignment,
    Representation,
    intersection_graph,
    is_interval,
    is_unit_interval,
    meet,
    verify,
)

# Endpoints are integers at scale 2, so (0, 2) stands for [0, 1].
# Touching intervals intersect.
a = IntervalAssignment(((0, 2), (2, 4), (5, 6)))
print("edges of the intersection graph:", sorted(intersection_graph(a).edges))

# C4 is not an interval graph, but adding either chord makes it one.
c4 = cycle(4)
print("C4 interval?", bool(is_interval(c4)))
with_02 = add_edges(c4, [(0, 2)])
with_13 = add_edges(c4, [(1, 3)])
print("C4 + 02 interval?", bool(is_interval(with_02)))
print("meet of the two chordal supergraphs is C4:", meet([with_02, with_13]) == c4)

# The recognisers return a witness assignment.
r = is_interval(with_02)
print("witness for C4 + 02:", r.witness.intervals)
print("P4 unit interval?", bool(is_unit_interval(path(4))))
print("claw unit interval?", bool(is_unit_interval(star(4))))

# Put the two witnesses together into a two-dimensional representation.
rep = Representation("box", (is_interval(with_02).witness, is_interval(with_13).witness), c4)
report = verify(rep)
print("verify:", report.ok, "breakers:", report.breakers)
print(rep.to_json())

# A broken representation: one dimension only leaves the chord 02 in place.
bad = verify(Representation("box", rep.dims[:1], c4))
print("one dim only:", [(v.clause, v.witness) for v in bad.violations])
