# Which forbidden subgraphs make the problems easy?
#
# classify_h sorts a pattern H into polynomial cases (H inside P4 or P1+P3)
# and hard ones. Hardness comes either from a claw or a cycle in H, or from
# H being a linear forest that contains 4P1, 2P1+P2 or 2P2.

from chromcrit.graph import cycle
from chromcrit.hfree import PATTERNS, classify_h, family, find_induced, is_h_free

for name in ("P4", "P1+P3", "P5", "2P2", "claw", "C4"):
    print(f"{name:6} {classify_h(PATTERNS[name])}")

# Detection returns an embedding, pattern vertex -> host vertex.

print(find_induced(cycle(7), PATTERNS["P1+P3"]))
print(is_h_free(cycle(5), family(("P1+P3", "C5"))).to_dict())
