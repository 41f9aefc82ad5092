"""Immutable simple undirected graphs with bitset adjacency rows.

Vertices are ``0..n-1``. Row ``adj[v]`` is a Python int whose bit ``u`` is set
iff ``uv`` is an edge. Every operation returns a new :class:`Graph`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 4096


class GraphError(ValueError):
    """Raised for invalid vertices, non-edges and malformed graphs."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Edge:
    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise GraphError(f"loop edge ({self.u}, {self.v})")
        if self.u > self.v:
            a, b = self.v, self.u
            object.__setattr__(self, "u", a)
            object.__setattr__(self, "v", b)

    def __iter__(self) -> Iterator[int]:
        yield self.u
        yield self.v


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple undirected graph.

    ``labels`` is an optional tuple of display strings, one per vertex. Labels
    do not take part in equality, which compares vertex count and edges only.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("negative vertex count")
        if self.n > MAX_VERTICES:
            raise GraphError(f"graph has {self.n} vertices, cap is {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or (row >> v) & 1:
                raise GraphError(f"row {v} has a loop or out-of-range bit")
            for u in bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label count does not match n")

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, (0,) * n)

    # queries ----------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> Iterator[Edge]:
        """Edges with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                yield Edge(u, u + 1 + v)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges()]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by lowest vertex."""
        out = []
        left = self.full_mask
        while left:
            seen = frontier = left & -left
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~seen
                seen |= frontier
            out.append(seen)
            left &= ~seen
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced(self, vertices: Iterable[int] | int) -> Graph:
        """Induced subgraph on ``vertices`` (a bitmask or an iterable), re-indexed in order."""
        if isinstance(vertices, int):
            keep = list(bits(vertices))
        else:
            keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v]):
                i = pos.get(u)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        labels = tuple(self.labels[v] for v in keep) if self.labels is not None else None
        return Graph(len(keep), tuple(rows), labels)

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def _check_edge(self, e: Edge | tuple[int, int]) -> tuple[int, int]:
        u, v = (e.u, e.v) if isinstance(e, Edge) else e
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v or not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        return (u, v) if u < v else (v, u)


def _drop_bit(row: int, v: int) -> int:
    """Remove bit ``v`` from ``row`` and shift the higher bits down by one."""
    low = row & ((1 << v) - 1)
    return low | ((row >> (v + 1)) << v)


def delete_vertex(g: Graph, v: int) -> Graph:
    g._check_vertex(v)
    rows = tuple(_drop_bit(r, v) for i, r in enumerate(g.adj) if i != v)
    labels = g.labels[:v] + g.labels[v + 1 :] if g.labels is not None else None
    return Graph(g.n - 1, rows, labels)


def delete_edge(g: Graph, e: Edge | tuple[int, int]) -> Graph:
    u, v = g._check_edge(e)
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows), g.labels)


def contract_edge(g: Graph, e: Edge | tuple[int, int]) -> Graph:
    """Merge the ends of ``e`` into one vertex that takes the place of ``u``.

    The merged vertex is adjacent to ``N(u) | N(v)`` minus the pair itself;
    ``v`` is then removed with order-preserving compaction.
    """
    u, v = g._check_edge(e)
    rows = list(g.adj)
    merged = (rows[u] | rows[v]) & ~((1 << u) | (1 << v))
    rows[u] = merged
    for w in bits(merged):
        rows[w] = (rows[w] | (1 << u)) & ~(1 << v)
    rows[v] = 0
    out = tuple(_drop_bit(r, v) for i, r in enumerate(rows) if i != v)
    labels = None
    if g.labels is not None:
        ls = list(g.labels)
        ls[u] = ls[u] + ls[v]
        labels = tuple(ls[:v] + ls[v + 1 :])
    return Graph(g.n - 1, out, labels)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.adj))
    return Graph(g.n, rows, g.labels)


def _merged_labels(a: Graph, b: Graph) -> tuple[str, ...] | None:
    if a.labels is None and b.labels is None:
        return None
    return tuple(a.label(v) for v in range(a.n)) + tuple(b.label(v) for v in range(b.n))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    rows = a.adj + tuple(r << a.n for r in b.adj)
    return Graph(a.n + b.n, rows, _merged_labels(a, b))


def join(a: Graph, b: Graph) -> Graph:
    amask = a.full_mask
    bmask = b.full_mask << a.n
    rows = tuple(r | bmask for r in a.adj) + tuple((r << a.n) | amask for r in b.adj)
    return Graph(a.n + b.n, rows, _merged_labels(a, b))


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph.empty(0)
    for h in graphs:
        out = disjoint_union(out, h)
    return out


# named graphs ---------------------------------------------------------


def path(r: int) -> Graph:
    if r < 1:
        raise GraphError("path needs at least one vertex")
    return Graph.from_edges(r, [(i, i + 1) for i in range(r - 1)])


def cycle(r: int) -> Graph:
    if r < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph.from_edges(r, [(i, (i + 1) % r) for i in range(r)])


def clique(r: int) -> Graph:
    if r < 1:
        raise GraphError("clique needs at least one vertex")
    return Graph.from_edges(r, [(i, j) for i in range(r) for j in range(i + 1, r)])


def empty(r: int) -> Graph:
    if r < 1:
        raise GraphError("empty graph needs at least one vertex")
    return Graph.empty(r)


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def make_named(kind: str, r: int) -> Graph:
    builders = {"path": path, "cycle": cycle, "clique": clique, "empty": empty}
    try:
        return builders[kind](r)
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None


def mycielskian(g: Graph) -> Graph:
    """Vertices ``0..n-1`` are the originals, ``n..2n-1`` their shadows, ``2n`` the apex."""
    n = g.n
    edges = list(g.edge_list())
    for u, v in g.edge_list():
        edges.append((u, n + v))
        edges.append((v, n + u))
    edges.extend((n + i, 2 * n) for i in range(n))
    return Graph.from_edges(2 * n + 1, edges)


@functools.lru_cache(maxsize=None)
def grotzsch() -> Graph:
    """The Grötzsch graph (Mycielskian of C5): 11 vertices, 20 edges, triangle-free, chromatic number 4."""
    from .chromatic import k_coloring

    g = mycielskian(cycle(5))
    assert g.n == 11 and g.m == 20
    assert not any(g.adj[u] & g.adj[v] for u, v in g.edge_list())
    assert k_coloring(g, 3) is None and k_coloring(g, 4) is not None
    return g
