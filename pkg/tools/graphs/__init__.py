"""Graph Calculus - reduce and evaluate intersection graphs."""

from .calculus import (
    GraphSignature,
    IntersectionGraph,
    TerminalForm,
    TerminalKind,
    canonical_signature,
    check_contraction_order,
    classify_terminal,
    contract_degree_two,
    evaluate_graph,
    split_components,
    terminal_value,
    vertex_degrees,
)

__all__ = [
    "GraphSignature",
    "IntersectionGraph",
    "TerminalForm",
    "TerminalKind",
    "canonical_signature",
    "check_contraction_order",
    "classify_terminal",
    "contract_degree_two",
    "evaluate_graph",
    "split_components",
    "terminal_value",
    "vertex_degrees",
]
