"""Symbolic Values - exact vectors over 1, omega^2, phi(X) and h_NT(x_alpha)."""

from .values import (
    FIELD_NAMES,
    ZERO,
    InvariantValues,
    SymbolicValue,
    derive_phi_bound,
    evaluate_numeric,
    linear_combine,
)

__all__ = [
    "FIELD_NAMES",
    "ZERO",
    "InvariantValues",
    "SymbolicValue",
    "derive_phi_bound",
    "evaluate_numeric",
    "linear_combine",
]
