"""Turán numbers of squared paths and related graphs.

Constructions of the extremal families, their closed-form edge counts,
subgraph containment with witnesses, and an exact search that recomputes
ex(n, H) together with every extremal graph up to isomorphism.
"""

from .canon import CanonicalForm, are_isomorphic, canonical_form, vertex_orbits
from .constructions import ConstructionSpec, build, expected_edges
from .containment import Pattern, contains_subgraph, is_embedding, lemma12_witness, parse_pattern
from .errors import (
    CapacityError,
    ConstructionError,
    DomainError,
    Graph6ParseError,
    InvalidEdgeError,
    SearchLimitExceeded,
    TuranError,
    UnknownClaimError,
)
from .formulas import (
    BoundValue,
    TuranTarget,
    closed_form_ex,
    conjecture_bound,
    erdos_gallai_bound,
    faudree_schelp_ex,
)
from .graph import Graph, add_edge, decode_graph6, empty_graph, encode_graph6, from_edges
from .kernels import BACKEND
from .search import SearchConfig, SearchResult, enumerate_free_at, search_max_edges
from .verify import Report, verify_claim

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BoundValue", "CanonicalForm", "CapacityError", "ConstructionError",
    "ConstructionSpec", "DomainError", "Graph", "Graph6ParseError", "InvalidEdgeError",
    "Pattern", "Report", "SearchConfig", "SearchLimitExceeded", "SearchResult",
    "TuranError", "TuranTarget", "UnknownClaimError", "add_edge", "are_isomorphic",
    "build", "canonical_form", "closed_form_ex", "conjecture_bound", "contains_subgraph",
    "decode_graph6", "empty_graph", "encode_graph6", "enumerate_free_at",
    "erdos_gallai_bound", "expected_edges", "faudree_schelp_ex", "from_edges",
    "is_embedding", "lemma12_witness", "parse_pattern", "search_max_edges",
    "verify_claim", "vertex_orbits",
]
