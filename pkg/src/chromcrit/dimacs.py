"""DIMACS ``.col`` reading and writing (1-indexed ``p edge`` / ``e`` lines)."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph


class DimacsError(ValueError):
    pass


def loads(text: str) -> Graph:
    n = None
    declared_m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: malformed problem line {line!r}")
            n, declared_m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise DimacsError(f"line {lineno}: malformed edge line {line!r}")
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise DimacsError(f"line {lineno}: bad edge {u} {v} for n={n}")
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"line {lineno}: unrecognised line {line!r}")
    if n is None:
        raise DimacsError("missing 'p edge <n> <m>' line")
    g = Graph.from_edges(n, edges)
    if g.m != declared_m:
        raise DimacsError(f"header declares {declared_m} edges, found {g.m} distinct edges")
    return g


def dumps(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"c {c}" for c in comment.splitlines()]
    lines.append(f"p edge {g.n} {g.m}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def read(path: str | Path) -> Graph:
    return loads(Path(path).read_text())


def write(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(g, comment))
