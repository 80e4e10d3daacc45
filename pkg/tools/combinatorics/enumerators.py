"""Lazy enumerators for set partitions, permutations and cyclic orders."""

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from shared.errors import InvalidArgumentError


Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class SetPartition:
    """
    Partition of {1..r} into nonempty blocks.

    Blocks are ordered by their smallest element and each block lists its
    elements in ascending order.
    """

    blocks: Tuple[Tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.blocks)

    @property
    def size(self) -> int:
        """Number of partitioned elements r."""
        return sum(len(block) for block in self.blocks)


@dataclass(frozen=True)
class CyclicOrder:
    """A bijection sigma: Z/|B| -> B, stored as (sigma(0), ..., sigma(|B|-1))."""

    block: Tuple[int, ...]
    mapping: Tuple[int, ...]

    def __call__(self, index: int) -> int:
        return self.mapping[index % len(self.mapping)]

    def __len__(self) -> int:
        return len(self.mapping)


def enumerate_set_partitions(r: int) -> Iterator[SetPartition]:
    """
    Stream every partition of {1..r} exactly once.

    Partitions are produced in lexicographic order of their restricted
    growth strings, which keeps the stream deterministic.

    Args:
        r: Number of elements (r >= 1)

    Returns:
        Iterator over SetPartition

    Raises:
        InvalidArgumentError: If r <= 0
    """
    if r <= 0:
        raise InvalidArgumentError(f"Set partitions need r >= 1, got {r}")
    return _partitions_from(1, r, [])


def _partitions_from(element: int, r: int, blocks: List[List[int]]) -> Iterator[SetPartition]:
    if element > r:
        yield SetPartition(tuple(tuple(block) for block in blocks))
        return
    for block in blocks:
        block.append(element)
        yield from _partitions_from(element + 1, r, blocks)
        block.pop()
    blocks.append([element])
    yield from _partitions_from(element + 1, r, blocks)
    blocks.pop()


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """
    Stream all n! bijections of {1..n}.

    A permutation p is a tuple with p[i - 1] the image of i.

    Raises:
        InvalidArgumentError: If n <= 0
    """
    if n <= 0:
        raise InvalidArgumentError(f"Permutations need n >= 1, got {n}")
    return itertools.permutations(range(1, n + 1))


def enumerate_cyclic_orders(block: Iterable[int]) -> Iterator[CyclicOrder]:
    """
    Stream all |B|! bijections Z/|B| -> B.

    Raises:
        InvalidArgumentError: If the block is empty
    """
    members = tuple(sorted(set(block)))
    if not members:
        raise InvalidArgumentError("Cyclic orders need a nonempty block")
    return (CyclicOrder(members, mapping) for mapping in itertools.permutations(members))


def bell_number(r: int) -> int:
    """Bell(r) computed with the Bell triangle."""
    if r < 0:
        raise InvalidArgumentError(f"Bell numbers need r >= 0, got {r}")
    if r == 0:
        return 1
    row = [1]
    for _ in range(r - 1):
        next_row = [row[-1]]
        for value in row:
            next_row.append(next_row[-1] + value)
        row = next_row
    return row[-1]


def count_undirected_cycles(size: int) -> int:
    """Number of distinct undirected cycles through all vertices of a block of the given size."""
    if size <= 0:
        raise InvalidArgumentError(f"Block size must be positive, got {size}")
    if size <= 3:
        return 1
    return math.factorial(size - 1) // 2


def cycle_orientation_multiplicity(size: int) -> int:
    """
    How often each undirected cycle occurs among the cyclic orders of a block.

    Start point and direction are not data of the cycle, so a cycle on at
    least three vertices is hit 2|B| times; smaller blocks |B| times.
    """
    if size <= 0:
        raise InvalidArgumentError(f"Block size must be positive, got {size}")
    return 2 * size if size >= 3 else size
