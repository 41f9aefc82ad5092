import itertools

import pytest
from hypothesis import given, settings

from chromcrit.chromatic import chi_bruteforce, validate_coloring
from chromcrit.criticality import (
    CONTRACT,
    EDGE,
    VERTEX,
    contraction_critical_edges,
    critical_edges,
    critical_vertices,
    criticality_report,
    has_contraction_critical_edge,
    has_critical_edge,
    has_critical_vertex,
)
from chromcrit.graph import Edge, Graph, clique, contract_edge, cycle, delete_edge, delete_vertex, disjoint_union, grotzsch, path

from conftest import graphs


def brute_critical(g):
    c = chi_bruteforce(g)
    verts = {v for v in range(g.n) if chi_bruteforce(delete_vertex(g, v)) < c}
    edges = {e for e in g.edges() if chi_bruteforce(delete_edge(g, e)) < c}
    contr = {e for e in g.edges() if chi_bruteforce(contract_edge(g, e)) < c}
    return verts, edges, contr


def test_clique_everything_critical():
    g = clique(5)
    assert critical_vertices(g) == set(range(5))
    assert critical_edges(g) == set(g.edges())
    assert contraction_critical_edges(g) == set(g.edges())


def test_two_triangles_nothing_critical():
    g = disjoint_union(clique(3), clique(3))
    rep = criticality_report(g)
    assert rep.chi == 3
    assert not rep.critical_vertices and not rep.critical_edges and not rep.contraction_critical_edges


def test_small_examples():
    assert critical_vertices(path(4)) == frozenset()
    assert critical_edges(path(2)) == {Edge(0, 1)}
    assert critical_edges(cycle(4)) == frozenset()
    assert contraction_critical_edges(cycle(4)) == frozenset()
    assert critical_vertices(cycle(5)) == set(range(5))
    assert critical_vertices(Graph.empty(1)) == {0}
    assert critical_vertices(Graph.empty(2)) == frozenset()


def test_grotzsch_is_vertex_critical():
    assert critical_vertices(grotzsch()) == set(range(11))
    assert critical_edges(grotzsch()) == set(grotzsch().edges())


def test_exists_variants():
    assert has_critical_vertex(cycle(5))
    assert not has_critical_vertex(disjoint_union(clique(3), clique(3)))
    assert has_critical_edge(clique(3)) and has_contraction_critical_edge(clique(3))
    assert not has_critical_edge(cycle(4)) and not has_contraction_critical_edge(cycle(4))
    rep = criticality_report(clique(4), exists=True)
    assert rep.exists_only and len(rep.critical_vertices) == 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_against_bruteforce(g):
    verts, edges, contr = brute_critical(g)
    rep = criticality_report(g)
    assert rep.critical_vertices == verts
    assert rep.critical_edges == edges
    assert rep.contraction_critical_edges == contr


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_edge_and_contraction_agree_on_all_labelled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        # the report asserts equality of the two sets on construction
        rep = criticality_report(g, (EDGE, CONTRACT), route="exact")
        assert rep.critical_edges == rep.contraction_critical_edges


@pytest.mark.parametrize("route", ["auto", "exact", "poly"])
def test_routes_agree(route):
    for g in (cycle(5), clique(4), path(5), disjoint_union(cycle(5), clique(2))):
        rep = criticality_report(g, route=route)
        assert rep == criticality_report(g, route="exact")


def test_witnesses_are_proper():
    g = cycle(7)
    rep = criticality_report(g, witnesses=True)
    assert rep.critical_vertices == set(range(7))
    for (op, el), col in rep.witnesses.items():
        h = {VERTEX: delete_vertex, EDGE: delete_edge, CONTRACT: contract_edge}[op](g, el)
        validate_coloring(h, col, max(col))
        assert max(col) <= rep.chi - 1


def test_assume_prop1_copies_edges():
    rep = criticality_report(cycle(5), assume_prop1=True)
    assert rep.contraction_critical_edges == rep.critical_edges == set(cycle(5).edges())


def test_parallel_matches_serial():
    g = grotzsch()
    assert criticality_report(g, jobs=2) == criticality_report(g, jobs=1)


def test_larger_component_shields_smaller():
    # critical elements only live in components that attain chi
    g = disjoint_union(cycle(5), clique(2))
    rep = criticality_report(g)
    assert rep.critical_vertices == set(range(5))
    assert all(e.v < 5 for e in rep.critical_edges)
    g = disjoint_union(cycle(5), cycle(5))
    assert not has_critical_vertex(g)
