"""Exact rationals and the combinatorial enumerators behind every closed formula."""

from .enumerators import (
    CyclicOrder,
    SetPartition,
    bell_number,
    count_undirected_cycles,
    cycle_orientation_multiplicity,
    enumerate_cyclic_orders,
    enumerate_permutations,
    enumerate_set_partitions,
)
from .rational import Rational, as_rational, falling_factorial, format_fraction, parse_fraction

__all__ = [
    "CyclicOrder",
    "Rational",
    "SetPartition",
    "as_rational",
    "bell_number",
    "count_undirected_cycles",
    "cycle_orientation_multiplicity",
    "enumerate_cyclic_orders",
    "enumerate_permutations",
    "enumerate_set_partitions",
    "falling_factorial",
    "format_fraction",
    "parse_fraction",
]
