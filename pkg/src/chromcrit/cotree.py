"""Cograph recognition and cotree colouring."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .chromatic import ColoringResult, Method, validate_coloring
from .graph import Graph, bits, complement

LEAF, UNION, JOIN = "leaf", "union", "join"


@dataclass(frozen=True)
class Cotree:
    kind: str
    vertex: int | None = None
    children: tuple[Cotree, ...] = ()

    def __post_init__(self) -> None:
        if self.kind == LEAF:
            assert self.vertex is not None and not self.children
        else:
            assert self.kind in (UNION, JOIN) and len(self.children) >= 2

    def leaves(self) -> list[int]:
        if self.kind == LEAF:
            return [self.vertex]
        return [v for c in self.children for v in c.leaves()]

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)

    def __str__(self) -> str:
        if self.kind == LEAF:
            return str(self.vertex)
        name = "Union" if self.kind == UNION else "Join"
        return f"{name}({', '.join(str(c) for c in self.children)})"


def leaf(v: int) -> Cotree:
    return Cotree(LEAF, v)


def to_graph(t: Cotree, n: int | None = None) -> Graph:
    """Evaluate a cotree; leaf ``v`` becomes vertex ``v``."""
    leaves = t.leaves()
    n = max(leaves) + 1 if n is None else n
    rows = [0] * n

    def walk(node: Cotree) -> int:
        if node.kind == LEAF:
            return 1 << node.vertex
        masks = [walk(c) for c in node.children]
        if node.kind == JOIN:
            for i, a in enumerate(masks):
                others = 0
                for j, b in enumerate(masks):
                    if j != i:
                        others |= b
                for v in bits(a):
                    rows[v] |= others
        out = 0
        for m in masks:
            out |= m
        return out

    walk(t)
    return Graph(n, tuple(rows))


def recognize_cograph(g: Graph) -> Cotree | None:
    """Cotree of ``g`` if ``g`` is P4-free, else None.

    A graph on two or more vertices is a cograph iff it or its complement is
    disconnected, recursively on the (co-)components.
    """
    if g.n == 0:
        return None
    co = complement(g)

    def build(mask: int) -> Cotree | None:
        if mask & (mask - 1) == 0:
            return leaf(mask.bit_length() - 1)
        parts = _components_within(g, mask)
        kind = UNION
        if len(parts) == 1:
            parts = _components_within(co, mask)
            kind = JOIN
            if len(parts) == 1:
                return None
        kids = []
        for p in parts:
            sub = build(p)
            if sub is None:
                return None
            # flatten same-kind children so internal nodes alternate
            kids.extend(sub.children if sub.kind == kind else (sub,))
        return Cotree(kind, children=tuple(kids))

    return build(g.full_mask)


def _components_within(g: Graph, mask: int) -> list[int]:
    out = []
    left = mask
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & mask & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def chi_cotree(t: Cotree, g: Graph | None = None) -> ColoringResult:
    """Bottom-up: union takes the max of its children, join the sum with colour offsets."""
    colour: dict[int, int] = {}

    def walk(node: Cotree, offset: int) -> int:
        if node.kind == LEAF:
            colour[node.vertex] = offset + 1
            return 1
        if node.kind == UNION:
            return max(walk(c, offset) for c in node.children)
        total = 0
        for c in node.children:
            total += walk(c, offset + total)
        return total

    chi = walk(t, 0)
    n = max(colour) + 1
    coloring = tuple(colour.get(v, 0) for v in range(n))
    validate_coloring(g if g is not None else to_graph(t, n), coloring, chi)
    return ColoringResult(chi, coloring, Method.COTREE)


def random_cotree(n: int, rng: random.Random) -> Cotree:
    """A random cotree on leaves ``0..n-1`` (shuffled), built by random binary merges."""
    labels = list(range(n))
    rng.shuffle(labels)
    nodes = [leaf(v) for v in labels]
    while len(nodes) > 1:
        i, j = sorted(rng.sample(range(len(nodes)), 2))
        b = nodes.pop(j)
        a = nodes.pop(i)
        nodes.append(Cotree(rng.choice((UNION, JOIN)), children=(a, b)))
    return nodes[0]


def random_cograph(n: int, rng: random.Random) -> Graph:
    return to_graph(random_cotree(n, rng), n)
