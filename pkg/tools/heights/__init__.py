"""Tautological Heights - self-intersections, heights and Bogomolov bounds of Z_{m,alpha}."""

from .formulas import (
    CurveParams,
    HeightCoefficients,
    PullbackSpec,
    arithmetic_self_intersection,
    auxiliary_tensor,
    auxiliary_volume,
    bogomolov_bound,
    geometric_self_intersection,
    height_coefficients,
    height_positivity_bound,
    hyperelliptic_invariants,
    hyperelliptic_residue,
    is_big,
    neron_tate_height,
    phi_local_lower_bound,
    pullback_tensor,
    zhang_conjectural_ratio,
)

__all__ = [
    "CurveParams",
    "HeightCoefficients",
    "PullbackSpec",
    "arithmetic_self_intersection",
    "auxiliary_tensor",
    "auxiliary_volume",
    "bogomolov_bound",
    "geometric_self_intersection",
    "height_coefficients",
    "height_positivity_bound",
    "hyperelliptic_invariants",
    "hyperelliptic_residue",
    "is_big",
    "neron_tate_height",
    "phi_local_lower_bound",
    "pullback_tensor",
    "zhang_conjectural_ratio",
]
