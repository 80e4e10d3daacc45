"""
Intersection engines for products of tautological bundles.

Two independent evaluators live here: the closed combinatorial sums over
permutations and set partitions, and the brute-force multilinear expansion
into intersection graphs. verify_identity compares g-indexed functions by
evaluation at enough points to pin down a polynomial identity.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from shared.errors import CrossCheckError, InvalidArgumentError, SingularGenusError
from shared.logger import get_logger
from shared.parallel import run_chunks, split_chunks
from tools.combinatorics.enumerators import (
    Permutation,
    SetPartition,
    enumerate_cyclic_orders,
    enumerate_permutations,
    enumerate_set_partitions,
)
from tools.combinatorics.rational import RationalLike, as_rational
from tools.graphs.calculus import IntersectionGraph, evaluate_graph, graph_memo_info
from tools.symbolic.values import ZERO, SymbolicValue

from .tensor import CoefficientTensor

logger = get_logger(__name__)

Block = Tuple[int, ...]
EdgeMultiset = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class ArithmeticCoefficients:
    """The three sums c1, c2, c3 the arithmetic formula is assembled from."""

    c1: Fraction
    c2: Fraction
    c3: Fraction

    def __add__(self, other: "ArithmeticCoefficients") -> "ArithmeticCoefficients":
        return ArithmeticCoefficients(self.c1 + other.c1, self.c2 + other.c2, self.c3 + other.c3)


@dataclass(frozen=True)
class IdentityReport:
    """
    Outcome of a multi-point comparison.

    Attributes:
        equal: True if both sides agreed at every point
        checked: Points evaluated, in order, up to and including a mismatch
        mismatch: (g, left, right) at the first disagreement, if any
    """

    equal: bool
    checked: Tuple[Fraction, ...]
    mismatch: Optional[Tuple[Fraction, object, object]] = None


# Brute-force expansion


def _expand_edges(
    tensor: CoefficientTensor, first_factor: Sequence[Tuple[Tuple[int, int], Fraction]]
) -> Dict[EdgeMultiset, Fraction]:
    states: Dict[EdgeMultiset, Fraction] = {(): Fraction(1)}
    for l in range(1, tensor.n + 1):
        weights = first_factor if l == 1 else tensor.edge_weights(l)
        merged: Dict[EdgeMultiset, Fraction] = defaultdict(Fraction)
        for edges, coefficient in states.items():
            for edge, weight in weights:
                merged[tuple(sorted(edges + (edge,)))] += coefficient * weight
        states = {edges: c for edges, c in merged.items() if c != 0}
    return states


def _bruteforce_chunk(
    payload: Tuple[CoefficientTensor, Fraction, List[Tuple[Tuple[int, int], Fraction]]]
) -> SymbolicValue:
    tensor, g, first_factor = payload
    total = ZERO
    for edges, coefficient in _expand_edges(tensor, first_factor).items():
        total = total + evaluate_graph(IntersectionGraph(tensor.r, edges), g).scale(coefficient)
    return total


def expand_bruteforce(tensor: CoefficientTensor, g: RationalLike, jobs: int = 1) -> SymbolicValue:
    """
    Expand <M_1, ..., M_n> multilinearly into intersection graphs.

    Each factor contributes one edge (j, k) weighted by 1/2 t_{l,j,k};
    the ordered pairs (j, k) and (k, j) give the same edge and are merged
    before any graph is built, and zero entries are never visited.

    Args:
        tensor: Coefficient tensor, any number of factors
        g: Genus as an exact rational
        jobs: Worker processes (the first factor's edges are split among them)

    Returns:
        Exact SymbolicValue

    Raises:
        SingularGenusError: Propagated from graph evaluation at g = 1
    """
    g = as_rational(g)
    if any(tensor.is_zero_factor(l) for l in range(1, tensor.n + 1)):
        return ZERO
    if tensor.n not in (tensor.r, tensor.r + 1):
        logger.warning(f"Every graph vanishes for n={tensor.n} factors on r={tensor.r} vertices")
        return ZERO

    first = tensor.edge_weights(1)
    payloads = [(tensor, g, chunk) for chunk in split_chunks(first, jobs)]
    total = ZERO
    for partial in run_chunks(_bruteforce_chunk, payloads, jobs):
        total = total + partial
    logger.debug(f"Brute-force expansion done; graph memo {graph_memo_info()}")
    return total


# Closed-form sums


def _labels(tau: Permutation, block: Block) -> Tuple[int, ...]:
    return tuple(tau[v - 1] for v in block)


class _CycleSums:
    """Cyclic-order sums of one tensor, memoized by block and factor labels."""

    def __init__(self, tensor: CoefficientTensor):
        self.tensor = tensor
        self._closed: Dict[Tuple[Block, Tuple[int, ...]], Fraction] = {}
        self._open: Dict[Tuple[Block, Tuple[int, ...], int], Tuple[Fraction, ...]] = {}

    def cycle_sum(self, block: Block, labels: Tuple[int, ...]) -> Fraction:
        """
        Sum over sigma of prod_i t_{label(sigma(i)), sigma(i), sigma(i+1)}.

        Each vertex of the block emits the edge to its successor using the
        factor it is labelled with.
        """
        key = (block, labels)
        if key not in self._closed:
            label = dict(zip(block, labels))
            t = self.tensor.t
            total = Fraction(0)
            for order in enumerate_cyclic_orders(block):
                product = Fraction(1)
                for i in range(len(block)):
                    product *= t(label[order(i)], order(i), order(i + 1))
                    if not product:
                        break
                total += product
            self._closed[key] = total
        return self._closed[key]

    def tail_sums(self, block: Block, labels: Tuple[int, ...], extra: int) -> Tuple[Fraction, ...]:
        """
        The three tail sums of the distinguished block.

        The path sigma(1) -> ... -> sigma(b-1) -> sigma(0) uses the labels
        of its emitting vertices. sigma(0) then emits one more edge with its
        own label and sigma(1) one with the extra label; the three sums
        differ in where these two edges end:

        - both at the same vertex k of the block (c1),
        - sigma(0) at sigma(k) and sigma(1) at sigma(j) for j < k (c2),
        - sigma(0) at sigma(j) and sigma(1) at sigma(k) for j < k (c3),

        with 1 <= j < k <= b and indices read mod b.
        """
        key = (block, labels, extra)
        if key not in self._open:
            label = dict(zip(block, labels))
            t = self.tensor.t
            size = len(block)
            c1 = c2 = c3 = Fraction(0)
            for order in enumerate_cyclic_orders(block):
                path = Fraction(1)
                for i in range(1, size):
                    path *= t(label[order(i)], order(i), order(i + 1))
                    if not path:
                        break
                if not path:
                    continue
                start, second = order(0), order(1)
                head = label[start]
                c1 += path * sum(
                    (t(head, start, k) * t(extra, second, k) for k in block), Fraction(0)
                )
                for k in range(2, size + 1):
                    for j in range(1, k):
                        c2 += path * t(head, start, order(k)) * t(extra, second, order(j))
                        c3 += path * t(head, start, order(j)) * t(extra, second, order(k))
            self._open[key] = (c1, c2, c3)
        return self._open[key]


def _geometric_chunk(payload: Tuple[CoefficientTensor, Fraction, List[Permutation]]) -> Fraction:
    tensor, g, perms = payload
    sums = _CycleSums(tensor)
    partitions: List[SetPartition] = list(enumerate_set_partitions(tensor.r))
    total = Fraction(0)
    for tau in perms:
        for partition in partitions:
            term = (-g) ** len(partition)
            for block in partition:
                term *= sums.cycle_sum(block, _labels(tau, block)) / len(block)
                if not term:
                    break
            total += term
    return total


def intersect_geometric(tensor: CoefficientTensor, g: RationalLike, jobs: int = 1) -> Fraction:
    """
    Geometric intersection number <M_1, ..., M_r> from the closed sum.

    sum over tau in S_r and partitions pi of {1..r} of
    (-g)^|pi| prod_B 1/|B| sum_sigma prod_i t_{tau(sigma(i)), sigma(i), sigma(i+1)}.
    Valid at every rational g, g = 1 included.

    Args:
        tensor: Tensor with n = r
        g: Genus as an exact rational
        jobs: Worker processes (permutations are split among them)

    Returns:
        Exact Fraction

    Raises:
        InvalidArgumentError: If n != r
    """
    if tensor.n != tensor.r:
        raise InvalidArgumentError(f"Geometric formula needs n = r, got n={tensor.n}, r={tensor.r}")
    g = as_rational(g)
    perms = list(enumerate_permutations(tensor.r))
    payloads = [(tensor, g, chunk) for chunk in split_chunks(perms, jobs)]
    return sum(run_chunks(_geometric_chunk, payloads, jobs), Fraction(0))


def _arithmetic_chunk(
    payload: Tuple[CoefficientTensor, Fraction, List[Permutation]]
) -> ArithmeticCoefficients:
    tensor, g, perms = payload
    r = tensor.r
    sums = _CycleSums(tensor)
    partitions: List[SetPartition] = list(enumerate_set_partitions(r))
    c1 = c2 = c3 = Fraction(0)
    for tau in perms:
        extra = tau[r]
        for partition in partitions:
            blocks = list(partition)
            closed = [sums.cycle_sum(block, _labels(tau, block)) / len(block) for block in blocks]
            scale = (-g) ** (len(blocks) - 1)
            for position, block in enumerate(blocks):
                weight = scale
                for other, value in enumerate(closed):
                    if other != position:
                        weight *= value
                if not weight:
                    continue
                tail1, tail2, tail3 = sums.tail_sums(block, _labels(tau, block), extra)
                c1 += weight * tail1
                c2 += weight * tail2
                c3 += weight * tail3
    return ArithmeticCoefficients(c1, c2, c3)


def arithmetic_coefficients(
    tensor: CoefficientTensor, g: RationalLike, jobs: int = 1
) -> ArithmeticCoefficients:
    """
    The sums c1, c2, c3 over tau in S_{r+1}, partitions pi of {1..r} and a
    distinguished block B' of pi.

    Every block other than B' closes into a cycle weighted like the
    geometric sum, with (-g)^(|pi|-1) in front; B' is opened into a path
    whose two loose ends are described in _CycleSums.tail_sums.

    Raises:
        InvalidArgumentError: If n != r + 1
    """
    if tensor.n != tensor.r + 1:
        raise InvalidArgumentError(
            f"Arithmetic formula needs n = r + 1, got n={tensor.n}, r={tensor.r}"
        )
    g = as_rational(g)
    perms = list(enumerate_permutations(tensor.r + 1))
    payloads = [(tensor, g, chunk) for chunk in split_chunks(perms, jobs)]
    total = ArithmeticCoefficients(Fraction(0), Fraction(0), Fraction(0))
    for partial in run_chunks(_arithmetic_chunk, payloads, jobs):
        total = total + partial
    logger.debug(f"c1={total.c1}, c2={total.c2}, c3={total.c3}")
    return total


def intersect_arithmetic(
    tensor: CoefficientTensor, g: RationalLike, jobs: int = 1
) -> SymbolicValue:
    """
    Arithmetic intersection number <M_1, ..., M_{r+1}>.

    (3g c1 + (2g+1) c3) / (24(g-1)) omega^2 - c3/12 phi
    + (g-1)(c1 + c3 - (g-1) c2)/2 h_NT; the scalar part is always zero.

    Args:
        tensor: Tensor with n = r + 1
        g: Genus as an exact rational, not 0 or 1
        jobs: Worker processes

    Returns:
        Exact SymbolicValue

    Raises:
        InvalidArgumentError: If n != r + 1
        SingularGenusError: If g is 0 or 1
    """
    g = as_rational(g)
    if g in (0, 1):
        raise SingularGenusError(f"Arithmetic formula is singular at g = {g}")
    c = arithmetic_coefficients(tensor, g, jobs)
    return SymbolicValue(
        omega2=(3 * g * c.c1 + (2 * g + 1) * c.c3) / (24 * (g - 1)),
        phi=-c.c3 / 12,
        hnt=(g - 1) * (c.c1 + c.c3 - (g - 1) * c.c2) / 2,
    )


class IntersectionEngine:
    """
    Evaluate tensors at one genus.

    Dispatches on the factor count: n = r goes to the geometric sum, n = r + 1
    to the arithmetic one. The brute-force expansion is available as an oracle.
    """

    def __init__(self, g: RationalLike, jobs: int = 1):
        """
        Initialize the engine.

        Args:
            g: Genus as an exact rational
            jobs: Worker processes
        """
        self.g = as_rational(g)
        self.jobs = jobs
        logger.debug(f"Initialized IntersectionEngine (g={self.g}, jobs={jobs})")

    def geometric(self, tensor: CoefficientTensor) -> Fraction:
        return intersect_geometric(tensor, self.g, self.jobs)

    def arithmetic(self, tensor: CoefficientTensor) -> SymbolicValue:
        return intersect_arithmetic(tensor, self.g, self.jobs)

    def bruteforce(self, tensor: CoefficientTensor) -> SymbolicValue:
        return expand_bruteforce(tensor, self.g, self.jobs)

    def intersect(self, tensor: CoefficientTensor, oracle: bool = False) -> SymbolicValue:
        """
        Closed-form intersection number, optionally checked by brute force.

        Raises:
            InvalidArgumentError: If n is neither r nor r + 1
            CrossCheckError: If the oracle disagrees
        """
        if tensor.n == tensor.r:
            value = SymbolicValue.of_scalar(self.geometric(tensor))
        elif tensor.n == tensor.r + 1:
            value = self.arithmetic(tensor)
        else:
            raise InvalidArgumentError(
                f"Need r or r + 1 factors, got {tensor.n} factors on r={tensor.r} vertices"
            )

        if oracle:
            expected = self.bruteforce(tensor)
            if expected != value:
                raise CrossCheckError(
                    f"closed form {value.to_fields()} != brute force {expected.to_fields()}"
                )
            logger.info("Brute-force oracle agrees")
        return value


def verify_identity(
    left: Callable[[Fraction], object],
    right: Callable[[Fraction], object],
    g_values: Iterable[RationalLike],
    degree_bound: Optional[int] = None,
) -> IdentityReport:
    """
    Compare two g-indexed functions point by point.

    Two polynomials of degree at most d that agree at d + 1 distinct
    points are equal, so a passing report with degree_bound set proves
    the identity.

    Args:
        left: First function of g
        right: Second function of g
        g_values: Evaluation points
        degree_bound: Degree bound of left - right, if known

    Returns:
        IdentityReport with the first mismatch, if any

    Raises:
        InvalidArgumentError: If there are not more distinct points than degree_bound
    """
    points = list(dict.fromkeys(as_rational(g) for g in g_values))
    if degree_bound is not None and len(points) <= degree_bound:
        raise InvalidArgumentError(
            f"{len(points)} points cannot decide an identity of degree {degree_bound}"
        )
    checked = []
    for g in points:
        checked.append(g)
        lhs, rhs = left(g), right(g)
        if lhs != rhs:
            logger.debug(f"Identity fails at g={g}: {lhs} != {rhs}")
            return IdentityReport(False, tuple(checked), (g, lhs, rhs))
    return IdentityReport(True, tuple(checked))
