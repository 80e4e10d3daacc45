"""Intersection Engine - closed formulas and brute-force expansion for tautological bundles."""

from .engine import (
    ArithmeticCoefficients,
    IdentityReport,
    IntersectionEngine,
    arithmetic_coefficients,
    expand_bruteforce,
    intersect_arithmetic,
    intersect_geometric,
    verify_identity,
)
from .tensor import CoefficientTensor

__all__ = [
    "ArithmeticCoefficients",
    "CoefficientTensor",
    "IdentityReport",
    "IntersectionEngine",
    "arithmetic_coefficients",
    "expand_bruteforce",
    "intersect_arithmetic",
    "intersect_geometric",
    "verify_identity",
]
