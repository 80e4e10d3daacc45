"""
Bounds for omega^2 in terms of phi(X) from the arithmetic Hodge index theorem.

For a symmetric matrix t with g sum_j t_jj = sum_{j!=k} t_jk the bundle
M = sum t_jk m_j m_k Delta_{jk} satisfies <(f*L)^(r-1), M^2> <= 0; reading
that value as A omega^2 + B phi gives omega^2 >= (B / -A) phi.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from shared.errors import InvalidArgumentError
from shared.logger import get_logger
from shared.parallel import run_chunks, split_chunks
from tools.combinatorics.rational import RationalLike, as_rational, falling_factorial
from tools.heights.formulas import PullbackSpec
from tools.intersection.engine import intersect_arithmetic
from tools.intersection.tensor import CoefficientTensor
from tools.symbolic.values import SymbolicValue, derive_phi_bound

logger = get_logger(__name__)

Matrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class BoundMatrix:
    """
    Symmetric r x r matrix t of M = sum_{j,k} t_jk m_j m_k Delta_{jk}.

    The sum runs over ordered pairs, so an unordered off-diagonal edge with
    coefficient w is stored as t_jk = t_kj = w / 2.
    """

    r: int
    t: Matrix

    def __post_init__(self) -> None:
        rows = tuple(tuple(as_rational(value) for value in row) for row in self.t)
        if len(rows) != self.r or any(len(row) != self.r for row in rows):
            raise InvalidArgumentError(f"Expected a {self.r}x{self.r} matrix")
        for j in range(self.r):
            for k in range(j + 1, self.r):
                if rows[j][k] != rows[k][j]:
                    raise InvalidArgumentError(f"Matrix is not symmetric at ({j + 1}, {k + 1})")
        object.__setattr__(self, "t", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "BoundMatrix":
        return cls(len(rows), tuple(tuple(as_rational(v) for v in row) for row in rows))

    def entry(self, j: int, k: int) -> Fraction:
        """t_jk with 1-based indices."""
        return self.t[j - 1][k - 1]

    @property
    def trace(self) -> Fraction:
        return sum((self.t[j][j] for j in range(self.r)), Fraction(0))

    @property
    def off_diagonal_sum(self) -> Fraction:
        """sum over j != k of t_jk."""
        total = sum((value for row in self.t for value in row), Fraction(0))
        return total - self.trace

    def scale(self, factor: RationalLike) -> "BoundMatrix":
        factor = as_rational(factor)
        return BoundMatrix(self.r, tuple(tuple(factor * v for v in row) for row in self.t))

    def to_rows(self) -> List[List[str]]:
        return [[str(value) for value in row] for row in self.t]


@dataclass(frozen=True)
class BoundResult:
    """Best candidate of a search: witness matrix, its ratio and its Hodge form value."""

    matrix: BoundMatrix
    ratio: Fraction
    value: SymbolicValue


def check_constraint(matrix: BoundMatrix, g: RationalLike) -> bool:
    """True iff g sum_j t_jj = sum_{j!=k} t_jk."""
    return as_rational(g) * matrix.trace == matrix.off_diagonal_sum


def _check_size(spec: PullbackSpec, matrix: BoundMatrix) -> None:
    if matrix.r != spec.r:
        raise InvalidArgumentError(f"Matrix is {matrix.r}x{matrix.r} but m has length {spec.r}")


def _pullback_matrix(spec: PullbackSpec) -> List[List[int]]:
    return [[-mj * mk for mk in spec.m] for mj in spec.m]


def _bundle_matrix(spec: PullbackSpec, matrix: BoundMatrix) -> List[List[Fraction]]:
    # 2 t_jk m_j m_k is M written as 1/2 sum t'_jk Delta_jk
    return [
        [2 * matrix.t[j][k] * spec.m[j] * spec.m[k] for k in range(spec.r)]
        for j in range(spec.r)
    ]


def build_hodge_tensor(spec: PullbackSpec, matrix: BoundMatrix) -> CoefficientTensor:
    """Tensor of (f*L)^(r-1) M^2: r - 1 pullback factors followed by two copies of M."""
    _check_size(spec, matrix)
    pullback = _pullback_matrix(spec)
    bundle = _bundle_matrix(spec, matrix)
    return CoefficientTensor.from_matrices([pullback] * (spec.r - 1) + [bundle, bundle])


def build_constraint_tensor(spec: PullbackSpec, matrix: BoundMatrix) -> CoefficientTensor:
    """Tensor of (f*L)^(r-1) M: r - 1 pullback factors followed by one copy of M."""
    _check_size(spec, matrix)
    pullback = _pullback_matrix(spec)
    return CoefficientTensor.from_matrices(
        [pullback] * (spec.r - 1) + [_bundle_matrix(spec, matrix)]
    )


def hodge_form(
    spec: PullbackSpec, matrix: BoundMatrix, g: RationalLike, jobs: int = 1
) -> SymbolicValue:
    """
    <(f*L)^(r-1), M^2> through the arithmetic closed formula.

    Args:
        spec: Multiplicities m
        matrix: Coefficients of M
        g: Genus as an exact rational, not 0 or 1
        jobs: Worker processes

    Returns:
        SymbolicValue with zero scalar part
    """
    return intersect_arithmetic(build_hodge_tensor(spec, matrix), g, jobs)


def constraint_pairing(
    spec: PullbackSpec, matrix: BoundMatrix, g: RationalLike
) -> Fraction:
    """<(f*L)^(r-1), M> = -2 (r-1)! (g)_{r-1} prod m_j^2 (g sum t_jj - sum_{j!=k} t_jk)."""
    _check_size(spec, matrix)
    g = as_rational(g)
    r = spec.r
    return (
        -2
        * math.factorial(r - 1)
        * falling_factorial(g, r - 1)
        * spec.square_product
        * (g * matrix.trace - matrix.off_diagonal_sum)
    )


def alternating_cycle_matrix(r: int, spec: Optional[PullbackSpec] = None) -> BoundMatrix:
    """
    Signed r-cycle: edge (j, j+1) gets (-1)^j for j = 1..r-1 and edge (1, r) gets (-1)^r.

    Coefficients are halved into the ordered-sum convention; the diagonal
    is zero, so the constraint holds at every g.

    Raises:
        InvalidArgumentError: If r is odd or below 4, or spec has another length
    """
    if r < 4 or r % 2:
        raise InvalidArgumentError(f"Alternating cycle needs even r >= 4, got {r}")
    if spec is not None and spec.r != r:
        raise InvalidArgumentError(f"m has length {spec.r}, expected {r}")
    rows = [[Fraction(0)] * r for _ in range(r)]
    edges = [(j, j + 1, (-1) ** j) for j in range(1, r)] + [(1, r, (-1) ** r)]
    for j, k, sign in edges:
        rows[j - 1][k - 1] = rows[k - 1][j - 1] = Fraction(sign, 2)
    return BoundMatrix.from_rows(rows)


def candidate_grid(r: int, values: Iterable[RationalLike]) -> Iterator[BoundMatrix]:
    """Every symmetric r x r matrix whose upper triangle takes entries from values."""
    if r < 1:
        raise InvalidArgumentError(f"Grid needs r >= 1, got {r}")
    choices = list(dict.fromkeys(as_rational(v) for v in values))
    slots = [(j, k) for j in range(r) for k in range(j, r)]
    for picked in itertools.product(choices, repeat=len(slots)):
        rows = [[Fraction(0)] * r for _ in range(r)]
        for (j, k), value in zip(slots, picked):
            rows[j][k] = rows[k][j] = value
        yield BoundMatrix.from_rows(rows)


def evaluate_candidate(
    spec: PullbackSpec, matrix: BoundMatrix, g: RationalLike
) -> Optional[Tuple[Fraction, SymbolicValue]]:
    """(ratio, Hodge form value) of a matrix; None if it breaks the constraint or bounds nothing."""
    if not check_constraint(matrix, g):
        return None
    value = hodge_form(spec, matrix, g)
    ratio = derive_phi_bound(value.drop_hnt())
    if ratio is None:
        return None
    return ratio, value


def _search_chunk(
    payload: Tuple[PullbackSpec, Fraction, List[BoundMatrix]]
) -> Optional[BoundResult]:
    spec, g, candidates = payload
    best: Optional[BoundResult] = None
    for matrix in candidates:
        evaluated = evaluate_candidate(spec, matrix, g)
        if evaluated is not None:
            best = _better(best, BoundResult(matrix, *evaluated))
    return best


def _better(
    current: Optional[BoundResult], candidate: Optional[BoundResult]
) -> Optional[BoundResult]:
    if candidate is None:
        return current
    if current is None or candidate.ratio > current.ratio:
        return candidate
    if candidate.ratio == current.ratio and candidate.matrix.t < current.matrix.t:
        return candidate
    return current


def bound_search(
    spec: PullbackSpec,
    g: RationalLike,
    candidates: Iterable[BoundMatrix],
    jobs: int = 1,
) -> Optional[BoundResult]:
    """
    Best phi-ratio over constraint-satisfying candidates.

    Ties go to the lexicographically smallest matrix, so the result does
    not depend on candidate order or on jobs.

    Args:
        spec: Multiplicities m
        g: Genus
        candidates: Matrices to try
        jobs: Worker processes

    Returns:
        BoundResult, or None if no candidate yields a bound
    """
    g = as_rational(g)
    pool = list(candidates)
    for matrix in pool:
        _check_size(spec, matrix)
    logger.debug(f"Searching {len(pool)} candidate matrices at g={g}")
    best: Optional[BoundResult] = None
    if pool:
        payloads = [(spec, g, chunk) for chunk in split_chunks(pool, jobs)]
        for partial in run_chunks(_search_chunk, payloads, jobs):
            best = _better(best, partial)
    return best


class HodgeBounds:
    """
    Bounds for one multiplicity vector m at one genus.

    Explicit matrices must satisfy the constraint; grid searches skip the
    ones that do not.
    """

    def __init__(self, spec: PullbackSpec, g: RationalLike, jobs: int = 1):
        """
        Initialize the bound calculator.

        Args:
            spec: Multiplicities m
            g: Genus as an exact rational, not 0 or 1
            jobs: Worker processes
        """
        self.spec = spec
        self.g = as_rational(g)
        self.jobs = jobs
        logger.debug(f"Initialized HodgeBounds (m={list(spec.m)}, g={self.g}, jobs={jobs})")

    def alternating(self) -> BoundMatrix:
        return alternating_cycle_matrix(self.spec.r, self.spec)

    def form(self, matrix: BoundMatrix) -> SymbolicValue:
        return hodge_form(self.spec, matrix, self.g, self.jobs)

    def pairing(self, matrix: BoundMatrix) -> Fraction:
        return constraint_pairing(self.spec, matrix, self.g)

    def evaluate(self, matrix: BoundMatrix) -> Tuple[Optional[Fraction], SymbolicValue]:
        """
        Hodge form value of a matrix and the phi-ratio read off it.

        Returns:
            (ratio, value); ratio is None when the omega^2 coefficient is not negative

        Raises:
            InvalidArgumentError: If the matrix breaks g sum t_jj = sum_{j!=k} t_jk
        """
        if not check_constraint(matrix, self.g):
            raise InvalidArgumentError(
                f"Constraint fails: g * trace = {self.g * matrix.trace}, "
                f"off-diagonal sum = {matrix.off_diagonal_sum}"
            )
        value = self.form(matrix)
        return derive_phi_bound(value.drop_hnt()), value

    def search(self, values: Iterable[RationalLike]) -> Optional[BoundResult]:
        """Best ratio over every symmetric matrix with entries from values."""
        return bound_search(
            self.spec, self.g, candidate_grid(self.spec.r, values), jobs=self.jobs
        )
