"""Exhaustive enumeration of clique covers.

Used to check statements that quantify over *all* minimum clique covers. It
works on the graph directly and shares no code with the colouring search.
"""

from __future__ import annotations

from typing import Iterator

from .chromatic import ResourceError
from .graph import Graph, bits

ENUM_CAP = 48


def _cliques_through(g: Graph, v: int, pool: int) -> Iterator[int]:
    """Every clique (bitmask) that contains ``v`` and otherwise lies in ``pool``."""

    def grow(clq: int, cand: int) -> Iterator[int]:
        yield clq
        while cand:
            u = (cand & -cand).bit_length() - 1
            cand &= ~(1 << u)
            yield from grow(clq | (1 << u), cand & g.adj[u])

    yield from grow(1 << v, pool & g.adj[v])


def _independent_lower_bound(g: Graph, mask: int) -> int:
    """Size of a greedy independent set in ``mask``; each of its vertices needs its own clique."""
    count = 0
    while mask:
        v = min(bits(mask), key=lambda u: ((g.adj[u] & mask).bit_count(), u))
        count += 1
        mask &= ~g.adj[v] & ~(1 << v)
    return count


def enumerate_clique_covers(g: Graph, size: int, cap: int = ENUM_CAP) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every partition of ``V(g)`` into exactly ``size`` cliques, each once.

    Parts are sorted tuples listed in order of their smallest vertex.
    """
    if g.n > cap:
        raise ResourceError(f"clique cover enumeration: {g.n} vertices exceeds cap {cap}")
    parts: list[int] = []

    def rec(left: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if not left:
            if len(parts) == size:
                yield tuple(tuple(bits(p)) for p in parts)
            return
        room = size - len(parts)
        if room <= 0 or _independent_lower_bound(g, left) > room:
            return
        v = (left & -left).bit_length() - 1
        for clq in _cliques_through(g, v, left & ~(1 << v)):
            parts.append(clq)
            yield from rec(left & ~clq)
            parts.pop()

    yield from rec(g.full_mask)


def minimum_cover_size(g: Graph, cap: int = ENUM_CAP) -> int:
    """Clique cover number by iterative deepening over :func:`enumerate_clique_covers`."""
    if g.n == 0:
        return 0
    k = _independent_lower_bound(g, g.full_mask)
    while next(enumerate_clique_covers(g, k, cap), None) is None:
        k += 1
    return k


def minimum_covers(g: Graph, cap: int = ENUM_CAP) -> tuple[int, list[tuple[tuple[int, ...], ...]]]:
    """``(sigma, all minimum clique covers)``."""
    k = minimum_cover_size(g, cap)
    return k, list(enumerate_clique_covers(g, k, cap))
