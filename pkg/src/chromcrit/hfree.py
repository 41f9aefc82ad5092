"""Induced-subgraph detection and the forbidden-graph complexity classifier."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, GraphError, bits, clique, complement, cycle, path, star, union_all


def triangle(g: Graph) -> tuple[int, int, int] | None:
    for u, v in g.edge_list():
        common = g.adj[u] & g.adj[v]
        if common:
            return (u, v, (common & -common).bit_length() - 1)
    return None


def _pattern_order(h: Graph) -> list[int]:
    """Pattern vertices ordered so each one is adjacent to an earlier one where possible."""
    order: list[int] = []
    placed = 0
    left = h.full_mask
    while left:
        frontier = left & (0 if not placed else _nbhd(h, placed))
        pool = frontier or left
        v = max(bits(pool), key=lambda u: ((h.adj[u] & placed).bit_count(), h.degree(u), -u))
        order.append(v)
        placed |= 1 << v
        left &= ~(1 << v)
    return order


def _nbhd(h: Graph, mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= h.adj[v]
    return out


def find_induced(g: Graph, h: Graph) -> dict[int, int] | None:
    """An embedding ``{pattern vertex: host vertex}`` of ``h`` as an induced subgraph of ``g``.

    Plain backtracking over candidate bitmasks; a host vertex can only take a
    pattern vertex whose degree and non-degree it dominates.
    """
    if h.n == 0:
        return {}
    if h.n > g.n or h.m > g.m:
        return None
    order = _pattern_order(h)
    full = g.full_mask
    gdeg = [g.degree(v) for v in range(g.n)]
    hdeg = [h.degree(v) for v in range(h.n)]
    fits = []
    for p in range(h.n):
        mask = 0
        for v in range(g.n):
            if gdeg[v] >= hdeg[p] and (g.n - 1 - gdeg[v]) >= (h.n - 1 - hdeg[p]):
                mask |= 1 << v
        fits.append(mask)
    nonadj = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    image: dict[int, int] = {}

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        cand = fits[p] & ~used
        for q, v in image.items():
            cand &= g.adj[v] if h.has_edge(p, q) else nonadj[v]
            if not cand:
                return False
        for v in bits(cand):
            image[p] = v
            if extend(i + 1, used | (1 << v)):
                return True
            del image[p]
        return False

    return dict(sorted(image.items())) if extend(0, 0) else None


def contains_induced(g: Graph, h: Graph) -> bool:
    return find_induced(g, h) is not None


@dataclass(frozen=True)
class FreenessEntry:
    name: str
    present: bool
    witness: dict[int, int] | None


@dataclass(frozen=True)
class FreenessReport:
    entries: tuple[FreenessEntry, ...]

    @property
    def free(self) -> bool:
        return not any(e.present for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "free": self.free,
            "patterns": [
                {
                    "name": e.name,
                    "present": e.present,
                    "witness": None if e.witness is None else [e.witness[p] for p in sorted(e.witness)],
                }
                for e in self.entries
            ],
        }


def is_h_free(g: Graph, patterns: list[Graph] | dict[str, Graph]) -> FreenessReport:
    """Per-pattern presence with the first embedding found."""
    items = patterns.items() if isinstance(patterns, dict) else ((f"H{i}", h) for i, h in enumerate(patterns))
    entries = []
    for name, h in items:
        w = find_induced(g, h)
        entries.append(FreenessEntry(name, w is not None, w))
    return FreenessReport(tuple(entries))


def is_linear_forest(h: Graph) -> bool:
    """Every component is a path: maximum degree at most 2 and no cycle."""
    if any(h.degree(v) > 2 for v in range(h.n)):
        return False
    return h.m == h.n - len(h.components())


# named patterns -------------------------------------------------------------


def paw() -> Graph:
    """Triangle with a pendant vertex."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def linear_forest(*lengths: int) -> Graph:
    return union_all(path(r) for r in lengths)


PATTERNS: dict[str, Graph] = {
    "P1": path(1),
    "P2": path(2),
    "P3": path(3),
    "P4": path(4),
    "P5": path(5),
    "P1+P3": linear_forest(1, 3),
    "3P1": Graph.empty(3),
    "4P1": Graph.empty(4),
    "2P2": linear_forest(2, 2),
    "2P1+P2": linear_forest(1, 1, 2),
    "co-(2P1+P2)": complement(linear_forest(1, 1, 2)),
    "K1,3": star(3),
    "claw": star(3),
    "C3": cycle(3),
    "C4": cycle(4),
    "C5": cycle(5),
    "K4": clique(4),
    "paw": paw(),
}

GADGET_FAMILY = ("C4", "C5", "K4", "co-(2P1+P2)")
TARGET_FAMILY = ("C5", "4P1", "2P1+P2", "2P2")


def family(names: tuple[str, ...]) -> dict[str, Graph]:
    return {name: PATTERNS[name] for name in names}


# classifier -----------------------------------------------------------------


class Verdict(str, enum.Enum):
    POLY = "PolyTime"
    NP_HARD = "NPHard"
    CONP_HARD = "CoNPHard"


class Rule(str, enum.Enum):
    SUB_P4 = "SubP4"
    SUB_P1P3 = "SubP1P3"
    CLAW_OR_CYCLE = "ContainsClawOrCycle"
    LINEAR_FOREST_HARD = "LinearForestHard"


VERDICT_OF = {
    Rule.SUB_P4: Verdict.POLY,
    Rule.SUB_P1P3: Verdict.POLY,
    Rule.CLAW_OR_CYCLE: Verdict.NP_HARD,
    Rule.LINEAR_FOREST_HARD: Verdict.CONP_HARD,
}

EXPLANATION = {
    Rule.SUB_P4: "H is an induced subgraph of P4: colouring H-free graphs is polynomial (cographs)",
    Rule.SUB_P1P3: "H is an induced subgraph of P1+P3: colouring H-free graphs is polynomial",
    Rule.CLAW_OR_CYCLE: "H contains a cycle or an induced claw: 2G+K_(l+1) / 2G+Grotzsch reductions",
    Rule.LINEAR_FOREST_HARD: "H is a linear forest containing 4P1, 2P1+P2 or 2P2: 1-in-3-SAT gadget reduction",
}


@dataclass(frozen=True)
class HClassification:
    verdict: Verdict
    rule: Rule

    def __post_init__(self) -> None:
        assert VERDICT_OF[self.rule] is self.verdict

    def __str__(self) -> str:
        return f"{self.verdict.value} (rule: {self.rule.value})"


def classify_h(h: Graph) -> HClassification:
    """Complexity of deciding critical vertices/edges on H-free graphs."""
    if h.n == 0:
        raise GraphError("classify_h needs a nonempty pattern")
    if contains_induced(PATTERNS["P4"], h):
        rule = Rule.SUB_P4
    elif contains_induced(PATTERNS["P1+P3"], h):
        rule = Rule.SUB_P1P3
    elif not is_linear_forest(h):
        rule = Rule.CLAW_OR_CYCLE
    else:
        rule = Rule.LINEAR_FOREST_HARD
    return HClassification(VERDICT_OF[rule], rule)


__all__ = [
    "FreenessReport",
    "HClassification",
    "PATTERNS",
    "Rule",
    "Verdict",
    "classify_h",
    "contains_induced",
    "find_induced",
    "is_h_free",
    "is_linear_forest",
    "triangle",
]
