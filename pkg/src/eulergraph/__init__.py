"""Euler tours and Euler families of hypergraphs, with verifiable certificates.

The package decides whether a hypergraph admits an Euler family (exactly, via
a matching reduction on its incidence graph), constructs Euler tours of
covering k-hypergraphs by merging family components with interchanging
cycles, and reduces higher arities to 3 before solving.  Every produced
object is re-checked by an independent verifier before it is returned.
"""

from .errors import (
    CertificateViolation,
    EulerGraphError,
    FormatError,
    InadmissibleOrderError,
    InfeasibleDegreeError,
    MergeExhaustedError,
)
from .family import (
    FamilySubgraph,
    extract_subgraph,
    find_family_subgraph,
    non_cut_v_vertices,
    subgraph_from_trails,
    trails_from_subgraph,
)
from .hypergraph import (
    CoveringReport,
    EulerFamily,
    EulerTour,
    Hypergraph,
    VerifyReport,
    Walk,
    canonical_closed_trail,
    edge_name,
    validate_covering,
    verify_euler_object,
)
from .incidence import (
    BlockDecomposition,
    Component,
    IncidenceGraph,
    articulation_points,
    block_decomposition,
    build_incidence,
    components,
)
from .interchange import (
    InterchangeCycle,
    MergeStats,
    apply_interchange,
    direct_order3_tour,
    find_diminishing_cycle,
    find_linking_cycle,
    is_interchanging,
    merge_to_tour,
)
from .matching import GadgetGraph, Matching, max_matching, reduce_to_matching
from .oracle import SearchBudget, brute_family_exists, brute_max_matching, brute_tour
from .solver import ReductionStep, SolveResult, lift_tour, reduce_order, solve

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "CertificateViolation",
    "Component",
    "CoveringReport",
    "EulerFamily",
    "EulerGraphError",
    "EulerTour",
    "FamilySubgraph",
    "FormatError",
    "GadgetGraph",
    "Hypergraph",
    "InadmissibleOrderError",
    "IncidenceGraph",
    "InfeasibleDegreeError",
    "InterchangeCycle",
    "Matching",
    "MergeExhaustedError",
    "MergeStats",
    "ReductionStep",
    "SearchBudget",
    "SolveResult",
    "VerifyReport",
    "Walk",
    "apply_interchange",
    "articulation_points",
    "block_decomposition",
    "brute_family_exists",
    "brute_max_matching",
    "brute_tour",
    "build_incidence",
    "canonical_closed_trail",
    "components",
    "direct_order3_tour",
    "edge_name",
    "extract_subgraph",
    "find_diminishing_cycle",
    "find_family_subgraph",
    "find_linking_cycle",
    "is_interchanging",
    "lift_tour",
    "max_matching",
    "merge_to_tour",
    "non_cut_v_vertices",
    "reduce_order",
    "reduce_to_matching",
    "solve",
    "subgraph_from_trails",
    "trails_from_subgraph",
    "validate_covering",
    "verify_euler_object",
]
