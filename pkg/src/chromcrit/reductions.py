"""Hardness instances: clique-proof and Grötzsch constructions, Monotone 1-in-3-SAT gadgets.

Formulas use 0-indexed variables internally; the text format is 1-indexed::

    # comment
    p m1in3 3
    c 1 2 3
    c 1 2 3
    c 1 2 3
"""

from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass

from .graph import Graph, GraphError, clique, complement, disjoint_union, grotzsch

ORACLE_CAP = 24


class FormulaError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Formula:
    """A Monotone 1-in-3-SAT instance: ``n`` variables, ``n`` clauses of 3 distinct variables."""

    n: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        problems = formula_violations(self.n, self.clauses)
        if problems:
            raise FormulaError(problems)

    def occurrences(self, x: int) -> list[int]:
        """Indices of the clauses containing ``x``, in clause order."""
        return [i for i, c in enumerate(self.clauses) if x in c]

    def to_text(self) -> str:
        lines = [f"p m1in3 {self.n}"]
        lines += ["c " + " ".join(str(x + 1) for x in c) for c in self.clauses]
        return "\n".join(lines) + "\n"

    def is_one_satisfied_by(self, assignment: tuple[bool, ...]) -> bool:
        return all(sum(assignment[x] for x in c) == 1 for c in self.clauses)


def formula_violations(n: int, clauses, lines: list[int] | None = None) -> list[str]:
    where = (lambda i: f"line {lines[i]}") if lines else (lambda i: f"clause {i + 1}")
    out = []
    if len(clauses) != n:
        out.append(f"{len(clauses)} clauses for {n} variables (m must equal n)")
    counts: Counter[int] = Counter()
    for i, c in enumerate(clauses):
        if len(c) != 3:
            out.append(f"{where(i)}: clause has {len(c)} literals, expected 3")
        elif len(set(c)) != 3:
            out.append(f"{where(i)}: repeated variable in clause")
        for x in c:
            if not 0 <= x < n:
                out.append(f"{where(i)}: variable {x + 1} out of range 1..{n}")
        counts.update(set(c))
    for x in range(n):
        if counts[x] != 3:
            out.append(f"variable {x + 1} occurs {counts[x]} times, expected 3")
    return out


def parse_formula(text: str) -> Formula:
    """Parse the ``p m1in3`` format; every violation is reported with its line number."""
    n = None
    clauses: list[tuple[int, ...]] = []
    lines: list[int] = []
    problems = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 3 or parts[1] != "m1in3" or not parts[2].isdigit():
                problems.append(f"line {lineno}: malformed header {line!r}")
            elif n is not None:
                problems.append(f"line {lineno}: duplicate header")
            else:
                n = int(parts[2])
        elif parts[0] == "c":
            try:
                clauses.append(tuple(int(t) - 1 for t in parts[1:]))
                lines.append(lineno)
            except ValueError:
                problems.append(f"line {lineno}: non-integer literal in {line!r}")
        else:
            problems.append(f"line {lineno}: unrecognised line {line!r}")
    if n is None:
        problems.append("missing 'p m1in3 <n>' header")
    if problems:
        raise FormulaError(problems)
    problems = formula_violations(n, clauses, lines)
    if problems:
        raise FormulaError(problems)
    return Formula(n, tuple(clauses))


def random_formula(n: int, seed: int, budget: int = 10_000) -> Formula:
    """Configuration-model instance: 3 stubs per variable dealt into ``n`` clauses of 3.

    Clauses with a repeated variable are repaired by swapping one of the
    offending stubs with a random stub elsewhere, up to ``budget`` swaps.
    """
    if n < 3:
        raise ValueError("need at least 3 variables")
    rng = random.Random(seed)
    stubs = [x for x in range(n) for _ in range(3)]
    rng.shuffle(stubs)
    for _ in range(budget):
        bad = [i for i in range(n) if len(set(stubs[3 * i : 3 * i + 3])) < 3]
        if not bad:
            clauses = tuple(tuple(stubs[3 * i : 3 * i + 3]) for i in range(n))
            return Formula(n, clauses)
        i = rng.choice(bad)
        j = 3 * i + rng.randrange(3)
        k = rng.randrange(3 * n)
        stubs[j], stubs[k] = stubs[k], stubs[j]
    raise GenerationError(f"no valid formula for n={n}, seed={seed} within {budget} swaps")


def base_formula() -> Formula:
    """The only valid instance on three variables: clause {x, y, z} three times."""
    return Formula(3, ((0, 1, 2),) * 3)


def oracle_1in3(f: Formula, cap: int = ORACLE_CAP) -> tuple[bool, ...] | None:
    """Exhaustive search for an assignment making exactly one variable true per clause."""
    from .chromatic import ResourceError

    if f.n > cap:
        raise ResourceError(f"oracle_1in3: {f.n} variables exceeds cap {cap}")
    masks = [(1 << a) | (1 << b) | (1 << c) for a, b, c in f.clauses]
    for word in range(1 << f.n):
        if all((word & m).bit_count() == 1 for m in masks):
            assignment = tuple(bool((word >> x) & 1) for x in range(f.n))
            assert f.is_one_satisfied_by(assignment)
            return assignment
    return None


# gadgets --------------------------------------------------------------------


class Variant(str, enum.Enum):
    VERTEX = "VertexC7"
    EDGE = "EdgeC11"


# Cyclic order of each clause gadget; ints are positions 0/1/2 of the clause's
# variables, strings are the filler vertices a_1..a_k.
CYCLE_ORDER = {
    Variant.VERTEX: (0, "a1", "a2", 1, "a3", 2, "a4"),
    Variant.EDGE: (0, "a1", "a2", 1, "a3", "a4", "a5", 2, "a6", "a7", "a8"),
}


@dataclass(frozen=True)
class Role:
    """``clause_var`` for c(x) vertices, ``filler`` for a_i^c vertices."""

    kind: str
    clause: int
    var: int | None = None
    index: int | None = None


@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph
    roles: tuple[Role, ...]
    variant: Variant
    formula: Formula

    def clause_var_vertex(self, clause: int, var: int) -> int:
        for v, r in enumerate(self.roles):
            if r.kind == "clause_var" and r.clause == clause and r.var == var:
                return v
        raise KeyError((clause, var))

    def clause_block(self, clause: int) -> list[int]:
        size = len(CYCLE_ORDER[self.variant])
        return list(range(size * clause, size * clause + size))


def _build_gadget(f: Formula, variant: Variant) -> GadgetGraph:
    order = CYCLE_ORDER[variant]
    size = len(order)
    edges: list[tuple[int, int]] = []
    roles: list[Role] = []
    labels: list[str] = []
    where: dict[tuple[int, int], int] = {}
    for ci, c in enumerate(f.clauses):
        base = size * ci
        for pos, slot in enumerate(order):
            if isinstance(slot, int):
                x = c[slot]
                where[ci, x] = base + pos
                roles.append(Role("clause_var", ci, var=x))
                labels.append(f"c{ci + 1}(x{x + 1})")
            else:
                idx = int(slot[1:])
                roles.append(Role("filler", ci, index=idx))
                labels.append(f"a{idx}^c{ci + 1}")
            edges.append((base + pos, base + (pos + 1) % size))
    for x in range(f.n):
        a, b, c = (where[ci, x] for ci in f.occurrences(x))
        edges += [(a, b), (b, c), (a, c)]
    g = Graph.from_edges(size * f.n, edges, labels)
    if g.m != (size + 3) * f.n:
        raise GraphError("gadget edge count mismatch: overlapping cycle and triangle edges")
    return GadgetGraph(g, tuple(roles), variant, f)


def build_vertex_gadget(f: Formula) -> GadgetGraph:
    """One induced C7 per clause plus one triangle per variable; 7n vertices."""
    return _build_gadget(f, Variant.VERTEX)


def build_edge_gadget(f: Formula) -> GadgetGraph:
    """As :func:`build_vertex_gadget` with C11 clause cycles; 11n vertices."""
    return _build_gadget(f, Variant.EDGE)


def to_target_instance(gg: GadgetGraph) -> Graph:
    """Complement of the gadget graph, the actual Critical Vertex/Edge instance."""
    return complement(gg.graph)


# graph constructions --------------------------------------------------------


def _tag(g: Graph, prefix: str) -> Graph:
    return Graph(g.n, g.adj, tuple(f"{prefix}{g.label(v)}" for v in range(g.n)))


def build_clique_proof_instance(g: Graph, ell: int) -> Graph:
    """``2g + K_{ell+1}``; labels record the block (``A:``, ``B:``, ``K:``)."""
    if ell < 1:
        raise ValueError("ell must be positive")
    return disjoint_union(disjoint_union(_tag(g, "A:"), _tag(g, "B:")), _tag(clique(ell + 1), "K:"))


def build_grotzsch_instance(g: Graph) -> Graph:
    """``2g + Grötzsch``; ``g`` must be triangle-free."""
    from .hfree import triangle

    if triangle(g) is not None:
        raise GraphError(f"input has a triangle {triangle(g)}")
    out = disjoint_union(disjoint_union(_tag(g, "A:"), _tag(g, "B:")), _tag(grotzsch(), "F:"))
    assert triangle(out) is None
    return out


def permute_clause(f: Formula, clause: int, perm: tuple[int, int, int]) -> Formula:
    """Copy of ``f`` with the variables of one clause reordered."""
    c = f.clauses[clause]
    clauses = list(f.clauses)
    clauses[clause] = tuple(c[i] for i in perm)
    return Formula(f.n, tuple(clauses))


__all__ = [
    "Formula",
    "FormulaError",
    "GadgetGraph",
    "GenerationError",
    "Role",
    "Variant",
    "base_formula",
    "build_clique_proof_instance",
    "build_edge_gadget",
    "build_grotzsch_instance",
    "build_vertex_gadget",
    "oracle_1in3",
    "parse_formula",
    "permute_clause",
    "random_formula",
    "to_target_instance",
]
