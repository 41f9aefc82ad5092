# From Monotone 1-in-3-SAT to critical vertices
#
# Each clause becomes a 7-cycle and each variable a triangle joining its
# three occurrences. The complement of this gadget graph has a critical
# vertex exactly when the formula has no 1-in-3 assignment.

from importlib import resources

from chromcrit import chi_exact, clique_cover_number, has_critical_vertex
from chromcrit.reductions import base_formula, build_vertex_gadget, oracle_1in3, parse_formula, to_target_instance

f = base_formula()
gg = build_vertex_gadget(f)
print(gg.graph, [gg.graph.label(v) for v in gg.clause_block(0)])
print("1-in-3 assignment:", oracle_1in3(f))
print("sigma:", clique_cover_number(gg.graph)[0])

target = to_target_instance(gg)
print("chi of complement:", chi_exact(target).chi, "critical vertex:", has_critical_vertex(target))

# The smallest stored formula without a 1-in-3 assignment has four variables.

text = resources.files("chromcrit").joinpath("data", "unsat_n4.m1in3").read_text()
bad = parse_formula(text)
target = to_target_instance(build_vertex_gadget(bad))
print(bad.clauses, oracle_1in3(bad), clique_cover_number(build_vertex_gadget(bad).graph)[0], has_critical_vertex(target))
