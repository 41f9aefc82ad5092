import itertools

import networkx as nx
from hypothesis import strategies as st

from chromcrit.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list())
    return h


def isomorphic(a, b):
    return nx.is_isomorphic(to_nx(a), to_nx(b))


def brute_induced(g, h):
    """Independent oracle: try every ordered choice of |h| host vertices."""
    for image in itertools.permutations(range(g.n), h.n):
        if all(h.has_edge(p, q) == g.has_edge(image[p], image[q]) for p, q in itertools.combinations(range(h.n), 2)):
            return True
    return False


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
