"""Critical vertices and edges for graph colouring.

Exact and polynomial chromatic-number routes, criticality scans, the
forbidden-graph complexity classifier and the hardness gadgets, with
machine-checked equivalences at small scale.
"""

from .chromatic import (
    ColoringResult,
    CliqueCover,
    Method,
    ResourceError,
    chi_bruteforce,
    chi_exact,
    clique_cover_number,
    k_coloring,
)
from .cotree import Cotree, chi_cotree, recognize_cograph
from .criticality import (
    CriticalityReport,
    contraction_critical_edges,
    critical_edges,
    critical_vertices,
    criticality_report,
    has_contraction_critical_edge,
    has_critical_edge,
    has_critical_vertex,
)
from .dispatch import chi
from .graph import (
    Edge,
    Graph,
    GraphError,
    complement,
    contract_edge,
    delete_edge,
    delete_vertex,
    disjoint_union,
    grotzsch,
    join,
    make_named,
)
from .hfree import HClassification, classify_h, contains_induced, find_induced, is_h_free, is_linear_forest
from .p1p3 import chi_p1p3_free
from .reductions import (
    Formula,
    GadgetGraph,
    build_clique_proof_instance,
    build_edge_gadget,
    build_grotzsch_instance,
    build_vertex_gadget,
    oracle_1in3,
    parse_formula,
    random_formula,
    to_target_instance,
)

__version__ = "0.1.0"
