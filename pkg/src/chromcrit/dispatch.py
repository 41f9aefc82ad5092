"""Route a colouring request to the cheapest correct algorithm."""

from __future__ import annotations

from .chromatic import DEFAULT_CAP, ColoringResult, Method, chi_exact
from .cotree import chi_cotree, recognize_cograph
from .graph import Graph
from .hfree import PATTERNS, contains_induced
from .p1p3 import chi_p1p3_free


def tractable_class(g: Graph) -> str | None:
    """``"cograph"``, ``"p1p3"`` or None. Both classes are closed under vertex deletion and edge contraction."""
    if g.n == 0 or recognize_cograph(g) is not None:
        return "cograph"
    if not contains_induced(g, PATTERNS["P1+P3"]):
        return "p1p3"
    return None


def chi(g: Graph, cap: int = DEFAULT_CAP) -> ColoringResult:
    """Chromatic number via the cotree route, then the (P1+P3)-free route, else exact search."""
    if g.n == 0:
        return ColoringResult(0, (), Method.COTREE)
    t = recognize_cograph(g)
    if t is not None:
        return chi_cotree(t, g)
    if not contains_induced(g, PATTERNS["P1+P3"]):
        return chi_p1p3_free(g, check=False)
    return chi_exact(g, cap)
