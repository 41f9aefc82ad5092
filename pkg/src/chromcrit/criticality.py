"""Critical vertices, critical edges and contraction-critical edges.

Each element is tested by building the reduced graph and asking whether it is
``(chi - 1)``-colourable. Deleting a vertex or an edge, or contracting an
edge, lowers the chromatic number by at most one, so colourability with
``chi - 1`` colours is the same as ``chi`` dropping by exactly one.

Edge deletion and edge contraction are evaluated independently so that their
agreement can be tested; ``assume_prop1=True`` reuses the deletion result for
contraction.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .chromatic import DEFAULT_CAP, k_coloring
from .dispatch import chi, tractable_class
from .graph import Edge, Graph, contract_edge, delete_edge, delete_vertex

VERTEX, EDGE, CONTRACT = "vertex", "edge", "contract"

_OPS: dict[str, Callable[[Graph, object], Graph]] = {
    VERTEX: delete_vertex,
    EDGE: delete_edge,
    CONTRACT: contract_edge,
}


@dataclass(frozen=True)
class CriticalityReport:
    chi: int
    critical_vertices: frozenset[int] | None = None
    critical_edges: frozenset[Edge] | None = None
    contraction_critical_edges: frozenset[Edge] | None = None
    witnesses: dict[tuple[str, object], tuple[int, ...]] = field(default_factory=dict, compare=False)
    exists_only: bool = False  # sets hold first hits only

    def __post_init__(self) -> None:
        if self.critical_edges is None or self.contraction_critical_edges is None:
            return
        if self.exists_only:
            assert bool(self.critical_edges) == bool(self.contraction_critical_edges)
        else:
            assert self.critical_edges == self.contraction_critical_edges, "critical != contraction-critical"

    def to_dict(self) -> dict:
        def edges(s):
            return None if s is None else [[e.u, e.v] for e in sorted(s, key=lambda e: (e.u, e.v))]

        return {
            "chi": self.chi,
            "critical_vertices": None if self.critical_vertices is None else sorted(self.critical_vertices),
            "critical_edges": edges(self.critical_edges),
            "contraction_critical_edges": edges(self.contraction_critical_edges),
            "exists_only": self.exists_only,
        }


def _drop_witness(h: Graph, target: int, poly: bool, cap: int) -> tuple[int, ...] | None:
    """A colouring of ``h`` with ``target`` colours if one exists."""
    if poly:
        res = chi(h, cap)
        return res.coloring if res.chi <= target else None
    return k_coloring(h, target, cap)


def _check(args: tuple) -> tuple[object, tuple[int, ...] | None]:
    g, op, element, target, poly, cap = args
    return element, _drop_witness(_OPS[op](g, element), target, poly, cap)


def _elements(g: Graph, op: str) -> list:
    return list(range(g.n)) if op == VERTEX else list(g.edges())


def _scan(
    g: Graph,
    op: str,
    chi_g: int,
    *,
    exists: bool = False,
    jobs: int = 1,
    route: str = "auto",
    cap: int = DEFAULT_CAP,
) -> dict[object, tuple[int, ...]]:
    """Map each critical element to a witness colouring of the reduced graph."""
    if route == "auto":
        # vertex deletion keeps a graph in its hereditary class; the dispatcher
        # falls back to exact search whenever a reduced graph leaves it
        poly = op != EDGE and tractable_class(g) is not None
    else:
        poly = route == "poly"
    tasks = [(g, op, el, chi_g - 1, poly, cap) for el in _elements(g, op)]
    found: dict[object, tuple[int, ...]] = {}
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for el, w in pool.map(_check, tasks, chunksize=max(1, len(tasks) // (4 * jobs))):
                if w is not None:
                    found[el] = w
                    if exists:
                        break
    else:
        for task in tasks:
            el, w = _check(task)
            if w is not None:
                found[el] = w
                if exists:
                    break
    return found


def _chi(g: Graph, cap: int) -> int:
    return chi(g, cap).chi


def critical_vertices(g: Graph, jobs: int = 1, cap: int = DEFAULT_CAP) -> frozenset[int]:
    return frozenset(_scan(g, VERTEX, _chi(g, cap), jobs=jobs, cap=cap))


def critical_edges(g: Graph, jobs: int = 1, cap: int = DEFAULT_CAP) -> frozenset[Edge]:
    return frozenset(_scan(g, EDGE, _chi(g, cap), jobs=jobs, cap=cap))


def contraction_critical_edges(g: Graph, jobs: int = 1, cap: int = DEFAULT_CAP) -> frozenset[Edge]:
    return frozenset(_scan(g, CONTRACT, _chi(g, cap), jobs=jobs, cap=cap))


def has_critical_vertex(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    return bool(_scan(g, VERTEX, _chi(g, cap), exists=True, cap=cap))


def has_critical_edge(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    return bool(_scan(g, EDGE, _chi(g, cap), exists=True, cap=cap))


def has_contraction_critical_edge(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    return bool(_scan(g, CONTRACT, _chi(g, cap), exists=True, cap=cap))


def criticality_report(
    g: Graph,
    kinds: Iterable[str] = (VERTEX, EDGE, CONTRACT),
    *,
    exists: bool = False,
    witnesses: bool = False,
    assume_prop1: bool = False,
    jobs: int = 1,
    route: str = "auto",
    cap: int = DEFAULT_CAP,
) -> CriticalityReport:
    """Full (or, with ``exists``, first-hit) scan of the requested element kinds."""
    kinds = set(kinds)
    chi_g = _chi(g, cap)
    sets: dict[str, frozenset | None] = {VERTEX: None, EDGE: None, CONTRACT: None}
    kept: dict[tuple[str, object], tuple[int, ...]] = {}
    for op in (VERTEX, EDGE, CONTRACT):
        if op not in kinds:
            continue
        if op == CONTRACT and assume_prop1 and sets[EDGE] is not None:
            sets[CONTRACT] = sets[EDGE]
            continue
        found = _scan(g, op, chi_g, exists=exists, jobs=jobs, route=route, cap=cap)
        sets[op] = frozenset(found)
        if witnesses:
            kept.update(((op, el), w) for el, w in found.items())
    return CriticalityReport(chi_g, sets[VERTEX], sets[EDGE], sets[CONTRACT], kept, exists)
