"""Hodge Bounds - omega^2 versus phi(X) from the arithmetic Hodge index theorem."""

from .bounds import (
    BoundMatrix,
    BoundResult,
    HodgeBounds,
    alternating_cycle_matrix,
    bound_search,
    build_constraint_tensor,
    build_hodge_tensor,
    candidate_grid,
    check_constraint,
    constraint_pairing,
    evaluate_candidate,
    hodge_form,
)

__all__ = [
    "BoundMatrix",
    "BoundResult",
    "HodgeBounds",
    "alternating_cycle_matrix",
    "bound_search",
    "build_constraint_tensor",
    "build_hodge_tensor",
    "candidate_grid",
    "check_constraint",
    "constraint_pairing",
    "evaluate_candidate",
    "hodge_form",
]
