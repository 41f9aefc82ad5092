"""Colouring (P1+P3)-free graphs through their complements.

The complement of a (P1+P3)-free graph is paw-free, and every component of a
paw-free graph is either triangle-free or complete multipartite. A colour
class of ``g`` is a clique of the complement, so ``chi(g)`` is the sum over
complement components ``D`` of the clique cover number of ``D``:

* complete multipartite ``D``: the largest part size;
* triangle-free ``D``: ``|D| - nu(D)`` with ``nu`` a maximum matching.
"""

from __future__ import annotations

import logging
import warnings

import networkx as nx

from .chromatic import ColoringResult, Method, chi_exact, validate_coloring
from .graph import Graph, GraphError, bits, complement
from .hfree import PATTERNS, find_induced, triangle

log = logging.getLogger(__name__)

# Number of components that needed the exact solver; stays 0 on paw-free complements.
fallback_count = 0


class StructuralFallbackWarning(RuntimeWarning):
    pass


def _multipartite_parts(d: Graph, mask: int) -> list[int] | None:
    """Parts of the component ``mask`` of ``d`` if it is complete multipartite."""
    parts: list[int] = []
    left = mask
    while left:
        v = (left & -left).bit_length() - 1
        part = mask & ~d.adj[v]
        for u in bits(part):
            if (d.adj[u] & mask) != (mask & ~part):
                return None
        parts.append(part)
        left &= ~part
    return parts


def _cliques_triangle_free(d: Graph, mask: int) -> list[list[int]]:
    """Minimum clique cover of a triangle-free component: a maximum matching plus singletons."""
    nxg = nx.Graph()
    verts = list(bits(mask))
    nxg.add_nodes_from(verts)
    nxg.add_edges_from((u, w) for u in verts for w in bits(d.adj[u] & mask) if u < w)
    matching = nx.max_weight_matching(nxg, maxcardinality=True)
    covered = set()
    out = []
    for u, w in sorted(tuple(sorted(e)) for e in matching):
        out.append([u, w])
        covered.update((u, w))
    out.extend([v] for v in verts if v not in covered)
    return out


def chi_p1p3_free(g: Graph, check: bool = True) -> ColoringResult:
    """Polynomial colouring of a (P1+P3)-free graph, with certificate."""
    global fallback_count
    if check:
        w = find_induced(g, PATTERNS["P1+P3"])
        if w is not None:
            raise GraphError(f"graph contains an induced P1+P3 at {sorted(w.values())}")
    if g.n == 0:
        return ColoringResult(0, (), Method.P1P3)
    d = complement(g)
    colour = [0] * g.n
    next_colour = 1
    for comp in d.components():
        parts = _multipartite_parts(d, comp)
        if parts is not None:
            # each colour class takes at most one vertex from each part
            groups: list[list[int]] = []
            for part in parts:
                for i, v in enumerate(bits(part)):
                    if i == len(groups):
                        groups.append([])
                    groups[i].append(v)
        elif triangle(d.induced(comp)) is None:
            groups = _cliques_triangle_free(d, comp)
        else:
            fallback_count += 1
            msg = f"component {sorted(bits(comp))} of the complement is not structured; using chi_exact"
            log.warning(msg)
            warnings.warn(msg, StructuralFallbackWarning, stacklevel=2)
            sub = complement(d.induced(comp))
            res = chi_exact(sub, cap=max(64, sub.n))
            verts = list(bits(comp))
            groups = [[verts[i] for i in cls] for cls in res.classes()]
        for cls in groups:
            for v in cls:
                colour[v] = next_colour
            next_colour += 1
    chi = next_colour - 1
    coloring = tuple(colour)
    validate_coloring(g, coloring, chi)
    return ColoringResult(chi, coloring, Method.P1P3)
