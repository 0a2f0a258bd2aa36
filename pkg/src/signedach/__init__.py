"""Proper and complete colourings of signed graphs."""

from .colouring import (
    Colouring,
    InferredColouring,
    classify_edge,
    drop_colour_class,
    infer,
    is_complete,
    is_inferred_complete,
    is_inferred_proper,
    is_proper,
    negate_colour_class,
    realize,
    reduce,
    swap_inferred_flags,
)
from .core import (
    NEG,
    POS,
    EdgeType,
    Graph,
    InvalidParameter,
    Sign,
    SignedGraph,
    SignedMultigraph,
    build_kstar,
    colour_set,
    kstar_size,
)
from .io import ParseError, parse_colouring, parse_graph, serialize_colouring, serialize_graph
from .solver import BudgetExhausted, chi, exists_complete_k, psi, witness_subgraph
from .switching import are_equivalent, canonical_form, switch

__all__ = [
    "Colouring", "InferredColouring", "classify_edge", "drop_colour_class", "infer", "is_complete",
    "is_inferred_complete", "is_inferred_proper", "is_proper", "negate_colour_class", "realize",
    "reduce", "swap_inferred_flags", "NEG", "POS", "EdgeType", "Graph", "InvalidParameter", "Sign",
    "SignedGraph", "SignedMultigraph", "build_kstar", "colour_set", "kstar_size", "ParseError",
    "parse_colouring", "parse_graph", "serialize_colouring", "serialize_graph", "BudgetExhausted",
    "chi", "exists_complete_k", "psi", "witness_subgraph", "are_equivalent", "canonical_form", "switch",
]
