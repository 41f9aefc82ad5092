# Colouring small graphs
#
# Three routes compute the chromatic number: a cotree for P4-free graphs,
# a structural rule for (P1+P3)-free graphs, and exact branch and bound for
# everything else. `chi` picks the cheapest one that applies.

import random

from chromcrit import chi, chi_exact, clique_cover_number
from chromcrit.cotree import random_cograph, recognize_cograph
from chromcrit.graph import Graph, complement, cycle, grotzsch, join

# The Grötzsch graph has no triangle and still needs four colours.

g = grotzsch()
res = chi(g)
print(g, res.chi, res.method.value)
print("colour classes:", res.classes())

# A random cograph goes through its cotree.

h = random_cograph(20, random.Random(1))
print(recognize_cograph(h))
print(chi(h).chi, chi(h).method.value)

# The 5-wheel is (P1+P3)-free. Its complement is C5 plus an isolated vertex.

wheel = join(cycle(5), Graph.empty(1))
print("W5:", chi(wheel).chi, chi(wheel).method.value)

# A clique cover of G is a colouring of its complement.

sigma, cover = clique_cover_number(cycle(7))
print("sigma(C7) =", sigma, cover.cliques)
assert sigma == chi_exact(complement(cycle(7))).chi
