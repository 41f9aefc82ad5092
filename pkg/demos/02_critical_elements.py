# Critical vertices and edges
#
# An element is critical when removing it lowers the chromatic number.
# Edges can be removed by deletion or by contraction; the two notions pick
# out the same edges.

from chromcrit import criticality_report
from chromcrit.graph import clique, cycle, disjoint_union, path

for name, g in [("C5", cycle(5)), ("C4", cycle(4)), ("P4", path(4)), ("2K3", disjoint_union(clique(3), clique(3)))]:
    rep = criticality_report(g)
    print(f"{name}: chi={rep.chi} vertices={sorted(rep.critical_vertices)} edges={len(rep.critical_edges)}")

# Witnesses are colourings of the reduced graph with one colour fewer.

rep = criticality_report(cycle(7), kinds=("vertex",), witnesses=True)
for (kind, v), colouring in list(rep.witnesses.items())[:3]:
    print(kind, v, colouring)

# When a second component reaches the same chromatic number nothing is critical.

print(criticality_report(disjoint_union(cycle(5), cycle(5)), exists=True).critical_vertices)
