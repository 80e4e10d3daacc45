"""Verification - golden values, brute-force oracles and closed-form identities."""

from .suites import (
    CheckResult,
    SuiteName,
    SuiteOptions,
    random_constraint_matrix,
    random_m,
    random_symmetric_matrix,
    random_tensor,
    run_suite,
)

__all__ = [
    "CheckResult",
    "SuiteName",
    "SuiteOptions",
    "random_constraint_matrix",
    "random_m",
    "random_symmetric_matrix",
    "random_tensor",
    "run_suite",
]
