"""Clique search over bitset graphs."""

from __future__ import annotations

from .graph import Graph, bits


def greedy_clique(g: Graph, within: int | None = None) -> int:
    """A maximal clique inside ``within`` found by repeatedly taking the highest-degree candidate."""
    cand = g.full_mask if within is None else within
    q = 0
    while cand:
        best = max(bits(cand), key=lambda v: ((g.adj[v] & cand).bit_count(), -v))
        q |= 1 << best
        cand &= g.adj[best]
    return q


def max_clique(g: Graph, within: int | None = None) -> int:
    """A maximum clique (as a bitmask) via branch and bound with greedy-colouring bounds."""
    adj = g.adj
    cand = g.full_mask if within is None else within
    best = [greedy_clique(g, cand)]
    best_size = [best[0].bit_count()]

    def colour_bound(p: int) -> list[tuple[int, int]]:
        # Sequential greedy colouring of P; returns (vertex, colour number) in ascending colour order.
        order = []
        k = 0
        left = p
        while left:
            k += 1
            avail = left
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~adj[v] & ~(1 << v)
                left &= ~(1 << v)
                order.append((v, k))
        return order

    def expand(r: int, size: int, p: int) -> None:
        for v, k in reversed(colour_bound(p)):
            if size + k <= best_size[0]:
                return
            np_ = p & adj[v]
            if np_:
                expand(r | (1 << v), size + 1, np_)
            elif size + 1 > best_size[0]:
                best[0] = r | (1 << v)
                best_size[0] = size + 1
            p &= ~(1 << v)

    if cand:
        expand(0, 0, cand)
    return best[0]


def clique_number(g: Graph) -> int:
    return max_clique(g).bit_count() if g.n else 0
