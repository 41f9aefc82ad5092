"""Chromatic number with certificates.

``chi_exact`` is a DSATUR branch and bound. ``chi_bruteforce`` is a naive
oracle kept deliberately separate from it. Polynomial routes for cographs and
(P1+P3)-free graphs live in :mod:`chromcrit.cotree` and :mod:`chromcrit.p1p3`;
:func:`chi` dispatches between them.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .cliques import max_clique
from .graph import Graph, bits, complement

DEFAULT_CAP = 64
BRUTEFORCE_CAP = 10


class ResourceError(RuntimeError):
    """An input exceeds a configured size cap."""


class Method(str, enum.Enum):
    EXACT = "Exact"
    COTREE = "Cotree"
    P1P3 = "P1P3Structural"
    BRUTEFORCE = "BruteForce"


@dataclass(frozen=True)
class ColoringResult:
    chi: int
    coloring: tuple[int, ...]  # colour of vertex v, in 1..chi
    method: Method

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.chi)]
        for v, c in enumerate(self.coloring):
            out[c - 1].append(v)
        return out


def validate_coloring(g: Graph, coloring: tuple[int, ...] | list[int], chi: int) -> None:
    """Raise ``AssertionError`` unless ``coloring`` is proper and uses exactly colours 1..chi."""
    if len(coloring) != g.n:
        raise AssertionError("coloring length does not match vertex count")
    for u, v in g.edge_list():
        if coloring[u] == coloring[v]:
            raise AssertionError(f"edge ({u}, {v}) is monochromatic")
    if set(coloring) != set(range(1, chi + 1)):
        raise AssertionError(f"coloring does not use exactly colours 1..{chi}")


def _normalise(coloring: list[int]) -> tuple[int, ...]:
    """Relabel colours 1..k in order of first appearance."""
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(c, len(relabel) + 1) for c in coloring)


# exact branch and bound -------------------------------------------------


def _dsatur_greedy(adj: tuple[int, ...], verts: list[int]) -> dict[int, int]:
    colour: dict[int, int] = {}
    sat = {v: 0 for v in verts}
    deg = {v: adj[v].bit_count() for v in verts}
    left = set(verts)
    while left:
        v = max(left, key=lambda w: (sat[w].bit_count(), deg[w], -w))
        c = 0
        while (sat[v] >> c) & 1:
            c += 1
        colour[v] = c
        left.discard(v)
        for w in bits(adj[v]):
            if w in left:
                sat[w] |= 1 << c
    return colour


class _Search:
    """DSATUR branch and bound on one connected vertex set."""

    def __init__(self, adj: tuple[int, ...], verts: list[int]):
        self.adj = adj
        self.verts = verts
        self.deg = {v: adj[v].bit_count() for v in verts}
        self.nodes = 0

    def run(self, lower: int, greedy: dict[int, int] | None, limit: int | None = None) -> dict[int, int] | None:
        """Search for a colouring with fewer colours than the incumbent.

        ``greedy`` is the incumbent colouring; with ``greedy=None`` the
        incumbent is a virtual one with ``limit + 1`` colours, which turns the
        search into a ``limit``-colourability decision. The search stops early
        once it reaches ``lower`` colours.
        """
        if greedy is not None:
            self.best = dict(greedy)
            self.best_k = max(greedy.values()) + 1
        else:
            self.best = None
            self.best_k = limit + 1
        self.lower = lower
        if self.best_k <= lower:
            return self.best
        self.colour: dict[int, int] = {}
        self.sat = {v: 0 for v in self.verts}
        self.uncoloured = set(self.verts)
        self._branch(0)
        return self.best

    def _bound(self, k: int) -> int:
        """Colours needed beyond ``k`` for a greedy clique among uncoloured vertices."""
        adj, sat = self.adj, self.sat
        used = (1 << k) - 1
        order = sorted(self.uncoloured, key=lambda w: ((used & ~sat[w]).bit_count(), -self.deg[w], w))
        cand = 0
        for w in order:
            cand |= 1 << w
        q_size = 0
        avail_union = 0
        extra = 0
        for w in order:
            if not (cand >> w) & 1:
                continue
            cand &= adj[w]
            q_size += 1
            avail_union |= used & ~sat[w]
            extra = max(extra, q_size - avail_union.bit_count())
        return extra

    def _branch(self, k: int) -> bool:
        """Return True once the search can stop (a colouring meeting the lower bound exists)."""
        self.nodes += 1
        if not self.uncoloured:
            if k < self.best_k:
                self.best = dict(self.colour)
                self.best_k = k
            return self.best_k <= self.lower
        if k + self._bound(k) >= self.best_k:
            return False
        adj, sat, deg = self.adj, self.sat, self.deg
        v = max(self.uncoloured, key=lambda w: (sat[w].bit_count(), deg[w], -w))
        self.uncoloured.discard(v)
        nbrs = [w for w in bits(adj[v]) if w in self.uncoloured]
        choices = [c for c in range(k) if not (sat[v] >> c) & 1]
        if k + 1 < self.best_k:
            choices.append(k)
        for c in choices:
            new_k = max(k, c + 1)
            if new_k >= self.best_k:
                continue
            self.colour[v] = c
            bit = 1 << c
            touched = [w for w in nbrs if not sat[w] & bit]
            for w in touched:
                sat[w] |= bit
            done = self._branch(new_k)
            for w in touched:
                sat[w] &= ~bit
            del self.colour[v]
            if done:
                self.uncoloured.add(v)
                return True
        self.uncoloured.add(v)
        return False


def chi_exact(g: Graph, cap: int = DEFAULT_CAP) -> ColoringResult:
    """Exact chromatic number with a validated optimal colouring.

    Components are solved independently. Each one gets a maximum-clique lower
    bound and a DSATUR upper bound; the gap is closed by exhaustive DSATUR
    branch and bound, so the returned colour count is optimal.
    """
    if g.n > cap:
        raise ResourceError(f"chi_exact: {g.n} vertices exceeds cap {cap}")
    colour = [0] * g.n
    chi = 0
    for comp in g.components():
        verts = list(bits(comp))
        lower = max_clique(g, comp).bit_count()
        greedy = _dsatur_greedy(g.adj, verts)
        found = _Search(g.adj, verts).run(lower, greedy)
        chi = max(chi, max(found.values()) + 1)
        for v, c in found.items():
            colour[v] = c
    result = ColoringResult(chi, _normalise(colour), Method.EXACT)
    validate_coloring(g, result.coloring, result.chi)
    return result


def chi_number(g: Graph, cap: int = DEFAULT_CAP) -> int:
    return chi_exact(g, cap).chi


def k_coloring(g: Graph, k: int, cap: int = DEFAULT_CAP) -> tuple[int, ...] | None:
    """A proper colouring with at most ``k`` colours (values 1..), or None if none exists."""
    if g.n > cap:
        raise ResourceError(f"k_coloring: {g.n} vertices exceeds cap {cap}")
    if g.n == 0:
        return ()
    if k <= 0:
        return None
    colour = [0] * g.n
    for comp in g.components():
        verts = list(bits(comp))
        if max_clique(g, comp).bit_count() > k:
            return None
        found = _dsatur_greedy(g.adj, verts)
        if max(found.values()) + 1 > k:
            found = _Search(g.adj, verts).run(1, None, limit=k)
            if found is None:
                return None
        for v, c in found.items():
            colour[v] = c
    out = _normalise(colour)
    validate_coloring(g, out, max(out))
    return out


# brute-force oracle ------------------------------------------------------


def chi_bruteforce(g: Graph) -> int:
    """Smallest k for which some assignment in ``range(k) ** n`` is proper."""
    if g.n > BRUTEFORCE_CAP:
        raise ResourceError(f"chi_bruteforce: {g.n} vertices exceeds cap {BRUTEFORCE_CAP}")
    if g.n == 0:
        return 0
    edges = g.edge_list()
    k = 1
    while True:
        for assignment in itertools.product(range(k), repeat=g.n):
            if all(assignment[u] != assignment[v] for u, v in edges):
                return k
        k += 1


# clique cover -----------------------------------------------------------


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.cliques)


def validate_clique_cover(g: Graph, cover: CliqueCover) -> None:
    seen: list[int] = []
    for k in cover.cliques:
        for i, u in enumerate(k):
            for v in k[i + 1 :]:
                if not g.has_edge(u, v):
                    raise AssertionError(f"part {k} is not a clique")
        seen.extend(k)
    if sorted(seen) != list(range(g.n)):
        raise AssertionError("cover is not a partition of the vertex set")


def clique_cover_number(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, CliqueCover]:
    """Minimum clique cover of ``g``, read off an optimal colouring of its complement."""
    res = chi_exact(complement(g), cap)
    cover = CliqueCover(tuple(tuple(c) for c in res.classes()))
    validate_clique_cover(g, cover)
    return res.chi, cover
