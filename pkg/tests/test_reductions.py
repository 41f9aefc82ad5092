from importlib import resources

import networkx as nx
import pytest

from chromcrit.chromatic import ResourceError, chi_exact, clique_cover_number
from chromcrit.cliques import clique_number
from chromcrit.covers import minimum_cover_size
from chromcrit.criticality import critical_edges, critical_vertices, has_critical_vertex
from chromcrit.graph import Graph, GraphError, clique, complement, cycle, grotzsch, path
from chromcrit.hfree import GADGET_FAMILY, TARGET_FAMILY, family, is_h_free, triangle
from chromcrit.reductions import (
    CYCLE_ORDER,
    Formula,
    FormulaError,
    Variant,
    base_formula,
    build_clique_proof_instance,
    build_edge_gadget,
    build_grotzsch_instance,
    build_vertex_gadget,
    oracle_1in3,
    parse_formula,
    permute_clause,
    random_formula,
    to_target_instance,
)

from conftest import to_nx

BASE_TEXT = "p m1in3 3\nc 1 2 3\nc 1 2 3\nc 1 2 3\n"


def fixture(name):
    return parse_formula(resources.files("chromcrit").joinpath("data", name).read_text())


# formulas -------------------------------------------------------------------


def test_parse_base():
    f = parse_formula("# tiny\n" + BASE_TEXT)
    assert f == base_formula()
    assert f.n == len(f.clauses) == 3
    assert parse_formula(f.to_text()) == f


def test_parse_repeated_variable():
    with pytest.raises(FormulaError) as exc:
        parse_formula("p m1in3 3\nc 1 1 2\nc 1 2 3\nc 1 2 3\n")
    assert any("line 2" in v and "repeated" in v for v in exc.value.violations)


def test_parse_four_occurrences():
    text = "p m1in3 4\nc 1 2 3\nc 1 2 4\nc 1 3 4\nc 1 2 3\n"
    with pytest.raises(FormulaError) as exc:
        parse_formula(text)
    assert any("variable 1 occurs 4 times" in v for v in exc.value.violations)


@pytest.mark.parametrize(
    "text",
    ["c 1 2 3\n", "p m1in3 3\nc 1 2 3\nc 1 2 3\n", "p m1in3 3\nc 1 2 x\nc 1 2 3\nc 1 2 3\n", "p cnf 3\n", "p m1in3 3\nq\n"],
)
def test_parse_rejects(text):
    with pytest.raises(FormulaError):
        parse_formula(text)


def test_oracle():
    a = oracle_1in3(base_formula())
    assert a is not None and sum(a) == 1
    assert oracle_1in3(fixture("unsat_n4.m1in3")) is None
    assert oracle_1in3(fixture("unsat_n6.m1in3")) is None
    with pytest.raises(ResourceError):
        oracle_1in3(random_formula(25, 0))


def test_random_formula():
    for seed in range(5):
        f = random_formula(3, seed)
        assert sorted(tuple(sorted(c)) for c in f.clauses) == list(base_formula().clauses)
    f = random_formula(6, 1)
    assert parse_formula(f.to_text()) == f
    assert random_formula(6, 1) == f
    for x in range(6):
        assert len(f.occurrences(x)) == 3
    assert random_formula(4, 0) == fixture("unsat_n4.m1in3")
    assert random_formula(6, 39) == fixture("unsat_n6.m1in3")


def test_smallest_unsat_fixture_is_minimal():
    # nothing below n=4 can fail: n=3 has a single instance, and it is satisfiable
    assert oracle_1in3(base_formula()) is not None
    assert all(oracle_1in3(random_formula(3, s)) is not None for s in range(20))


# gadgets ----------------------------------------------------------------------


def _cycle_edges(gg, c):
    block = gg.clause_block(c)
    return {frozenset((block[i], block[(i + 1) % len(block)])) for i in range(len(block))}


@pytest.mark.parametrize("variant", [Variant.VERTEX, Variant.EDGE])
def test_gadget_structure(variant):
    f = random_formula(6, 2)
    gg = (build_vertex_gadget if variant is Variant.VERTEX else build_edge_gadget)(f)
    size = len(CYCLE_ORDER[variant])
    g = gg.graph
    assert g.n == size * f.n and g.m == (size + 3) * f.n
    for c, clause in enumerate(f.clauses):
        block = gg.clause_block(c)
        h = g.induced(block)
        assert nx.is_isomorphic(to_nx(h), nx.cycle_graph(size))
        assert {frozenset(e) for e in h.edge_list()} == {
            frozenset((block.index(a), block.index(b))) for a, b in map(tuple, _cycle_edges(gg, c))
        }
        for x in clause:
            assert gg.clause_var_vertex(c, x) in block
    for x in range(f.n):
        tri = [gg.clause_var_vertex(c, x) for c in f.occurrences(x)]
        assert all(g.has_edge(a, b) for a in tri for b in tri if a != b)
    assert clique_number(g) == 3
    assert is_h_free(g, family(GADGET_FAMILY)).free
    assert is_h_free(to_target_instance(gg), family(TARGET_FAMILY)).free


def test_vertex_gadget_cycle_order():
    gg = build_vertex_gadget(base_formula())
    g = gg.graph
    assert (g.n, g.m) == (21, 30)
    x, y, z = (gg.clause_var_vertex(0, v) for v in range(3))
    block = gg.clause_block(0)
    # c(x) a1 a2 c(y) a3 c(z) a4
    assert [block.index(v) for v in (x, y, z)] == [0, 3, 5]
    assert not g.has_edge(x, y) and not g.has_edge(y, z) and not g.has_edge(x, z)
    assert g.label(x) == "c1(x1)"


def test_edge_gadget_counts():
    gg = build_edge_gadget(base_formula())
    assert (gg.graph.n, gg.graph.m) == (33, 42)
    block = gg.clause_block(1)
    assert [block.index(gg.clause_var_vertex(1, v)) for v in range(3)] == [0, 3, 7]


def test_base_instance_cover_and_complement():
    gg = build_vertex_gadget(base_formula())
    sigma, _ = clique_cover_number(gg.graph)
    assert sigma == 10 == minimum_cover_size(gg.graph)
    target = to_target_instance(gg)
    assert target == complement(gg.graph)
    assert target.labels == gg.graph.labels
    assert chi_exact(target).chi == 10
    assert critical_vertices(target) == frozenset()


def test_base_instance_edge_variant_has_no_critical_edge():
    target = to_target_instance(build_edge_gadget(base_formula()))
    assert critical_edges(target) == frozenset()


def test_unsat_fixture_has_critical_vertex_and_edge():
    f = fixture("unsat_n4.m1in3")
    assert has_critical_vertex(to_target_instance(build_vertex_gadget(f)))
    assert critical_edges(to_target_instance(build_edge_gadget(f)))


def test_permute_clause():
    f = random_formula(6, 3)
    g = permute_clause(f, 2, (2, 0, 1))
    assert g.clauses[2] == (f.clauses[2][2], f.clauses[2][0], f.clauses[2][1])
    assert g.clauses[:2] == f.clauses[:2]


# hardness instances --------------------------------------------------------------


def test_clique_proof_instance():
    g = build_clique_proof_instance(cycle(5), 3)
    assert g.n == 14 and chi_exact(g).chi == 4
    assert g.label(0) == "A:0" and g.label(13) == "K:3"
    assert has_critical_vertex(g)

    g = build_clique_proof_instance(clique(4), 3)
    assert chi_exact(g).chi == 4
    assert not has_critical_vertex(g) and not critical_edges(g)

    g = build_clique_proof_instance(Graph.empty(3), 1)
    assert g.n == 8 and g.m == 1 and critical_edges(g)

    with pytest.raises(ValueError):
        build_clique_proof_instance(cycle(5), 0)


def test_grotzsch_instance():
    g = build_grotzsch_instance(cycle(5))
    assert triangle(g) is None and chi_exact(g).chi == 4
    assert has_critical_vertex(g)
    assert not has_critical_vertex(build_grotzsch_instance(grotzsch()))
    g = build_grotzsch_instance(path(2))
    assert chi_exact(g).chi == 4 and has_critical_vertex(g)
    with pytest.raises(GraphError):
        build_grotzsch_instance(clique(3))


def test_formula_rejects_bad_direct_construction():
    with pytest.raises(FormulaError):
        Formula(3, ((0, 1, 2), (0, 1, 2)))
