"""
Verification suites: golden values, oracle agreement and closed-form identities.

Each suite returns one CheckResult per named check. Randomized checks draw
from a random.Random seeded with the suite name and the run seed, so a
report is reproducible for a fixed seed.
"""

import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from shared.errors import InvalidArgumentError
from shared.logger import get_logger
from tools.combinatorics.enumerators import bell_number, enumerate_set_partitions
from tools.combinatorics.rational import falling_factorial, format_fraction
from tools.graphs.calculus import IntersectionGraph, evaluate_graph
from tools.heights.formulas import (
    CurveParams,
    PullbackSpec,
    arithmetic_self_intersection,
    auxiliary_tensor,
    auxiliary_volume,
    bogomolov_bound,
    geometric_self_intersection,
    height_coefficients,
    height_positivity_bound,
    hyperelliptic_residue,
    pullback_tensor,
)
from tools.hodge.bounds import (
    BoundMatrix,
    alternating_cycle_matrix,
    build_constraint_tensor,
    build_hodge_tensor,
    check_constraint,
    constraint_pairing,
    hodge_form,
)
from tools.intersection.engine import (
    ArithmeticCoefficients,
    arithmetic_coefficients,
    expand_bruteforce,
    intersect_arithmetic,
    intersect_geometric,
    verify_identity,
)
from tools.intersection.tensor import CoefficientTensor
from tools.symbolic.values import ZERO, SymbolicValue, derive_phi_bound

logger = get_logger(__name__)

TENSOR_NUMERATORS = (-2, -1, 0, 1, 2)
TENSOR_DENOMINATORS = (1, 2)
ORACLE_GENERA = (2, 3, 5)


class SuiteName(str, Enum):
    """Available verification suites."""

    TABLE1 = "table1"
    ORACLE_GEOMETRIC = "oracle-geometric"
    ORACLE_ARITHMETIC = "oracle-arithmetic"
    CLOSED_FORMS = "closed-forms"
    HEIGHTS = "heights"
    BOUNDS = "bounds"
    ALL = "all"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check."""

    suite: str
    check: str
    passed: bool
    detail: str

    def to_fields(self) -> Dict[str, str]:
        return {
            "suite": self.suite,
            "check": self.check,
            "status": "pass" if self.passed else "fail",
            "detail": self.detail,
        }


@dataclass(frozen=True)
class SuiteOptions:
    """
    Knobs shared by all suites.

    Attributes:
        max_r: Largest vertex count for randomized tensors
        seed: Seed of the random draws
        jobs: Worker processes for the engines
        samples: Override of the per-check sample count
    """

    max_r: int = 4
    seed: int = 0
    jobs: int = 1
    samples: Optional[int] = None

    def count(self, default: int) -> int:
        return self.samples if self.samples is not None else default


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(TENSOR_NUMERATORS), rng.choice(TENSOR_DENOMINATORS))


def random_tensor(rng: random.Random, r: int, n: int) -> CoefficientTensor:
    """Symmetric tensor with entries drawn from {-2..2} / {1, 2}."""
    entries = [
        (l, j, k, random_fraction(rng))
        for l in range(1, n + 1)
        for j in range(1, r + 1)
        for k in range(j, r + 1)
    ]
    return CoefficientTensor.from_entries(r, n, entries)


def random_m(rng: random.Random, r: int, bound: int = 3) -> PullbackSpec:
    """Random nonzero multiplicities with |m_j| <= bound."""
    choices = [x for x in range(-bound, bound + 1) if x]
    return PullbackSpec(tuple(rng.choice(choices) for _ in range(r)))


def _random_rows(rng: random.Random, r: int) -> List[List[Fraction]]:
    rows = [[Fraction(0)] * r for _ in range(r)]
    for j in range(r):
        for k in range(j, r):
            rows[j][k] = rows[k][j] = random_fraction(rng)
    return rows


def random_symmetric_matrix(rng: random.Random, r: int) -> BoundMatrix:
    return BoundMatrix.from_rows(_random_rows(rng, r))


def random_constraint_matrix(rng: random.Random, r: int, g: int) -> BoundMatrix:
    """Random symmetric matrix with t_11 solved from g sum t_jj = sum_{j!=k} t_jk."""
    rows = _random_rows(rng, r)
    off_diagonal = sum(rows[j][k] for j in range(r) for k in range(r) if j != k)
    rows[0][0] = Fraction(off_diagonal) / g - sum(rows[j][j] for j in range(1, r))
    return BoundMatrix.from_rows(rows)


def _rng(options: SuiteOptions, suite: SuiteName) -> random.Random:
    return random.Random(f"{options.seed}:{suite.value}")


def _result(suite: SuiteName, check: str, failure: Optional[str], detail: str) -> CheckResult:
    if failure is not None:
        return CheckResult(suite.value, check, False, failure)
    return CheckResult(suite.value, check, True, detail)


def _first_failure(cases: Iterable[Tuple[str, object, object]]) -> Optional[str]:
    """First case whose two sides differ, rendered for the report."""
    for label, got, expected in cases:
        if got != expected:
            return f"{label}: got {_render(got)}, expected {_render(expected)}"
    return None


def _render(value: object) -> str:
    if isinstance(value, SymbolicValue):
        return ",".join(f"{k}={v}" for k, v in value.to_fields().items())
    if isinstance(value, Fraction):
        return format_fraction(value)
    return str(value)


# Terminal graph values


def _terminal_graphs() -> List[Tuple[str, IntersectionGraph, Callable[[Fraction], SymbolicValue]]]:
    return [
        (
            "circle",
            IntersectionGraph(1, ((1, 1),)),
            lambda g: SymbolicValue(scalar=-2 * g),
        ),
        (
            "figure-eight",
            IntersectionGraph(1, ((1, 1), (1, 1))),
            lambda g: SymbolicValue(omega2=g / (g - 1), hnt=4 * (g - 1)),
        ),
        (
            "dumbbell",
            IntersectionGraph(2, ((1, 1), (1, 2), (2, 2))),
            lambda g: SymbolicValue(hnt=-4 * (g - 1) ** 2),
        ),
        (
            "theta",
            IntersectionGraph(2, ((1, 2), (1, 2), (1, 2))),
            lambda g: SymbolicValue(
                omega2=(2 * g + 1) / (2 * g - 2), phi=Fraction(-1), hnt=6 * (g - 1)
            ),
        ),
    ]


def suite_table1(options: SuiteOptions) -> List[CheckResult]:
    """Values of the four terminal graphs for g = 2..10."""
    genera = [Fraction(g) for g in range(2, 11)]
    results = []
    for name, graph, expected in _terminal_graphs():
        failure = _first_failure(
            (f"g={g}", evaluate_graph(graph, g), expected(g)) for g in genera
        )
        results.append(_result(SuiteName.TABLE1, name, failure, "g=2..10"))
    return results


# Engine oracles


def suite_oracle_geometric(options: SuiteOptions) -> List[CheckResult]:
    """Closed geometric sum against brute force on random n = r tensors."""
    rng = _rng(options, SuiteName.ORACLE_GEOMETRIC)
    max_r = max(1, min(options.max_r, 4))
    total = options.count(200)
    cases = []
    for index in range(total):
        r = 1 + index % max_r
        g = Fraction(ORACLE_GENERA[index % len(ORACLE_GENERA)])
        tensor = random_tensor(rng, r, r)
        closed = SymbolicValue.of_scalar(intersect_geometric(tensor, g, options.jobs))
        brute = expand_bruteforce(tensor, g, options.jobs)
        cases.append((f"tensor #{index} (r={r}, g={g})", brute, closed))
    failure = _first_failure(cases)
    return [
        _result(
            SuiteName.ORACLE_GEOMETRIC,
            "closed-vs-bruteforce",
            failure,
            f"{total} tensors, r<={max_r}",
        )
    ]


def suite_oracle_arithmetic(options: SuiteOptions) -> List[CheckResult]:
    """Closed arithmetic sum against brute force on random n = r + 1 tensors."""
    rng = _rng(options, SuiteName.ORACLE_ARITHMETIC)
    max_r = max(1, min(options.max_r, 3))
    total = options.count(100)
    cases = []
    invariance = []
    for index in range(total):
        r = 1 + index % max_r
        g = Fraction(ORACLE_GENERA[index % len(ORACLE_GENERA)])
        tensor = random_tensor(rng, r, r + 1)
        closed = intersect_arithmetic(tensor, g, options.jobs)
        brute = expand_bruteforce(tensor, g, options.jobs)
        cases.append((f"tensor #{index} (r={r}, g={g})", closed, brute))
        factor_order = list(range(1, r + 2))
        rng.shuffle(factor_order)
        vertex_order = list(range(1, r + 1))
        rng.shuffle(vertex_order)
        moved = tensor.permute_factors(factor_order).relabel_vertices(vertex_order)
        invariance.append((f"tensor #{index} permuted", intersect_arithmetic(moved, g), closed))
    return [
        _result(
            SuiteName.ORACLE_ARITHMETIC,
            "closed-vs-bruteforce",
            _first_failure(cases),
            f"{total} tensors, r<={max_r}",
        ),
        _result(
            SuiteName.ORACLE_ARITHMETIC,
            "permutation-invariance",
            _first_failure(invariance),
            f"{total} tensors",
        ),
    ]


# Closed forms of pullback self-intersections


def pullback_sums(spec: PullbackSpec, g: int) -> ArithmeticCoefficients:
    """c1, c2, c3 of the pullback tensor; c2 = c3 there."""
    front = math.factorial(spec.r + 1) * spec.square_product
    c1 = front * falling_factorial(g - 2, spec.r - 1) * spec.square_sum
    c3 = -front * falling_factorial(g - 3, spec.r - 2) * spec.cross_sum
    return ArithmeticCoefficients(c1, c3, c3)


def suite_closed_forms(options: SuiteOptions) -> List[CheckResult]:
    """Pullback self-intersections, auxiliary volumes and enumeration counts."""
    rng = _rng(options, SuiteName.CLOSED_FORMS)
    results = []

    geometric_failure = None
    for r in range(1, min(options.max_r, 4) + 1):
        spec = random_m(rng, r)
        tensor = pullback_tensor(spec, r)
        report = verify_identity(
            lambda g, tensor=tensor: intersect_geometric(tensor, g, options.jobs),
            lambda g, spec=spec: geometric_self_intersection(spec, CurveParams(int(g))),
            range(1, 9),
            degree_bound=r,
        )
        if not report.equal:
            geometric_failure = f"m={list(spec.m)} fails at g={report.mismatch[0]}"
            break
    results.append(
        _result(SuiteName.CLOSED_FORMS, "geometric", geometric_failure, "g=1..8, g=1 included")
    )

    arithmetic_failure = None
    for r in range(1, min(options.max_r, 3) + 1):
        spec = random_m(rng, r)
        tensor = pullback_tensor(spec, r + 1)
        report = verify_identity(
            lambda g, tensor=tensor: intersect_arithmetic(tensor, g, options.jobs),
            lambda g, spec=spec: arithmetic_self_intersection(spec, CurveParams(int(g))),
            range(2, 9),
        )
        if not report.equal:
            arithmetic_failure = f"m={list(spec.m)} fails at g={report.mismatch[0]}"
            break
        label = f"c1,c2,c3 of m={list(spec.m)}"
        arithmetic_failure = _first_failure(
            (f"{label}, g={g}", arithmetic_coefficients(tensor, g), pullback_sums(spec, g))
            for g in range(2, 6)
        )
        if arithmetic_failure is not None:
            break
    results.append(
        _result(SuiteName.CLOSED_FORMS, "arithmetic", arithmetic_failure, "g=2..8, c2=c3")
    )

    vanishing = [
        (f"r={g + 1}, g={g}", geometric_self_intersection(random_m(rng, g + 1), CurveParams(g)), 0)
        for g in range(1, 6)
    ]
    results.append(
        _result(SuiteName.CLOSED_FORMS, "vanishing-above-g", _first_failure(vanishing), "g=1..5")
    )

    volume = []
    for r in range(1, min(options.max_r, 4) + 1):
        spec = random_m(rng, r)
        for g in (1, 2, 3):
            params = CurveParams(g)
            volume.append(
                (
                    f"m={list(spec.m)}, g={g}",
                    intersect_geometric(auxiliary_tensor(spec), g),
                    auxiliary_volume(spec, params),
                )
            )
    results.append(
        _result(SuiteName.CLOSED_FORMS, "auxiliary-volume", _first_failure(volume), "g=1..3")
    )

    partitions = [
        (f"r={r}", sum(1 for _ in enumerate_set_partitions(r)), bell_number(r))
        for r in range(1, 8)
    ]
    results.append(
        _result(SuiteName.CLOSED_FORMS, "partition-count", _first_failure(partitions), "r=1..7")
    )
    return results


# Heights


def suite_heights(options: SuiteOptions) -> List[CheckResult]:
    """Height coefficients, their vanishing at r = g and the derived bounds."""
    rng = _rng(options, SuiteName.HEIGHTS)
    results = []

    routes = []
    for g in range(2, 7):
        for r in range(1, g):
            spec = random_m(rng, r)
            params = CurveParams(g, rng.choice((1, 2, 3)))
            via_intersections = arithmetic_self_intersection(spec, params).scale(
                Fraction(1) / (params.d_K * (r + 1) * geometric_self_intersection(spec, params))
            )
            routes.append(
                (
                    f"m={list(spec.m)}, g={g}, d_K={params.d_K}",
                    height_coefficients(spec, params).assemble(),
                    via_intersections,
                )
            )
    results.append(
        _result(SuiteName.HEIGHTS, "route-equality", _first_failure(routes), "1<=r<g<=6")
    )

    vanishing = []
    for g in range(3, 7):
        spec = random_m(rng, g)
        vanishing.append(
            (f"r=g={g}", arithmetic_self_intersection(spec, CurveParams(g)), SymbolicValue())
        )
    genus_two = random_m(rng, 2)
    value = arithmetic_self_intersection(genus_two, CurveParams(2))
    vanishing.append(
        ("r=g=2, alpha=omega/2, hyperelliptic", hyperelliptic_residue(value.drop_hnt(), 2), ZERO)
    )
    results.append(
        _result(SuiteName.HEIGHTS, "vanishing-at-r=g", _first_failure(vanishing), "g=2..6")
    )

    positivity = []
    for g in range(3, 11):
        m = [rng.choice((1, 2, 3)) for _ in range(min(g - 1, 3) - 1)]
        spec = PullbackSpec(tuple(m) + (-sum(m),))
        positivity.append(
            (
                f"m={list(spec.m)}, g={g}",
                height_positivity_bound(spec, CurveParams(g)),
                Fraction(2, 3 * g - 1),
            )
        )
    results.append(
        _result(
            SuiteName.HEIGHTS, "positivity-ratio", _first_failure(positivity), "sum m = 0, g=3..10"
        )
    )

    bogomolov = []
    for g in range(3, 13):
        r = rng.randint(1, g - 1)
        spec = random_m(rng, r)
        params = CurveParams(g, rng.choice((1, 2)))
        coefficients = height_coefficients(spec, params)
        combined = coefficients.prefactor * (
            coefficients.a * Fraction(g - 1, 2 * g + 1) + coefficients.b
        )
        bogomolov.append(
            (f"m={list(spec.m)}, g={g}", bogomolov_bound(spec, params), combined)
        )
    results.append(
        _result(SuiteName.HEIGHTS, "bogomolov-identity", _first_failure(bogomolov), "g=3..12")
    )
    return results


# Hodge bounds


def _square_matrix(g: Fraction) -> BoundMatrix:
    return BoundMatrix.from_rows([[1, g], [g, 1]])


def suite_bounds(options: SuiteOptions) -> List[CheckResult]:
    """Hodge form values, the vanishing for r = g + 2 and the constraint pairing."""
    rng = _rng(options, SuiteName.BOUNDS)
    jobs = options.jobs
    results = []

    square = []
    for g in map(Fraction, range(2, 13)):
        expected = SymbolicValue(omega2=-4 * g**2 * (2 * g + 1) / (g - 1), phi=4 * g**2)
        value = hodge_form(PullbackSpec((1, 1)), _square_matrix(g), g, jobs).drop_hnt()
        square.append((f"g={g}", value, expected))
        square.append((f"ratio g={g}", derive_phi_bound(value), (g - 1) / (2 * g + 1)))
    results.append(_result(SuiteName.BOUNDS, "r=2-matrix", _first_failure(square), "g=2..12"))

    cycle = []
    ones = PullbackSpec((1, 1, 1, 1))
    alternating = alternating_cycle_matrix(4, ones)
    for g in map(Fraction, range(3, 9)):
        expected = SymbolicValue(
            omega2=-4 * (15 * g**3 - 14 * g**2 - 19 * g - 6) / (g - 1),
            phi=8 * (3 * g**2 - g - 6),
        )
        cycle.append((f"g={g}", hodge_form(ones, alternating, g, jobs).drop_hnt(), expected))
    for g, ratio in ((3, Fraction(1, 3)), (4, Fraction(38, 109))):
        value = hodge_form(ones, alternating, g, jobs)
        cycle.append((f"ratio g={g}", derive_phi_bound(value.drop_hnt()), ratio))
    results.append(
        _result(SuiteName.BOUNDS, "alternating-4-cycle", _first_failure(cycle), "g=3..8")
    )

    vanishing = []
    for index in range(options.count(20)):
        spec = random_m(rng, 4)
        matrix = random_constraint_matrix(rng, 4, 2)
        value = hyperelliptic_residue(hodge_form(spec, matrix, 2, jobs), 2)
        vanishing.append((f"matrix #{index}", value, SymbolicValue()))
    results.append(
        _result(
            SuiteName.BOUNDS,
            "vanishing-r=g+2",
            _first_failure(vanishing),
            "g=2, r=4, modulo the hyperelliptic relation",
        )
    )

    pairing = []
    for index in range(options.count(50)):
        r = 1 + index % 3
        g = rng.randint(2, 6)
        spec = random_m(rng, r)
        if index % 2:
            matrix = random_constraint_matrix(rng, r, g)
        else:
            matrix = random_symmetric_matrix(rng, r)
        closed = constraint_pairing(spec, matrix, g)
        engine = intersect_geometric(build_constraint_tensor(spec, matrix), g, jobs)
        pairing.append((f"pair #{index}", engine, closed))
        pairing.append((f"zero iff constraint #{index}", closed == 0, check_constraint(matrix, g)))
    results.append(
        _result(SuiteName.BOUNDS, "constraint-pairing", _first_failure(pairing), "r<=3, g=2..6")
    )

    oracle = []
    for index in range(options.count(10)):
        r = 1 + index % min(options.max_r, 3)
        g = Fraction(ORACLE_GENERA[index % len(ORACLE_GENERA)])
        spec = random_m(rng, r, bound=2)
        matrix = random_constraint_matrix(rng, r, int(g))
        tensor = build_hodge_tensor(spec, matrix)
        closed = intersect_arithmetic(tensor, g, jobs)
        oracle.append((f"matrix #{index}", closed, expand_bruteforce(tensor, g, jobs)))
    results.append(
        _result(SuiteName.BOUNDS, "hodge-vs-bruteforce", _first_failure(oracle), "r<=3")
    )
    return results


SUITES: Dict[SuiteName, Callable[[SuiteOptions], List[CheckResult]]] = {
    SuiteName.TABLE1: suite_table1,
    SuiteName.ORACLE_GEOMETRIC: suite_oracle_geometric,
    SuiteName.ORACLE_ARITHMETIC: suite_oracle_arithmetic,
    SuiteName.CLOSED_FORMS: suite_closed_forms,
    SuiteName.HEIGHTS: suite_heights,
    SuiteName.BOUNDS: suite_bounds,
}


def run_suite(name: str, options: Optional[SuiteOptions] = None) -> List[CheckResult]:
    """
    Run one suite, or every suite for "all".

    Args:
        name: Suite name
        options: Sample sizes, seed and parallelism

    Returns:
        Check results in a fixed order

    Raises:
        InvalidArgumentError: If the suite name is unknown
    """
    options = options or SuiteOptions()
    try:
        suite = SuiteName(name)
    except ValueError:
        known = ", ".join(s.value for s in SuiteName)
        raise InvalidArgumentError(f"Unknown suite {name!r}; expected one of {known}") from None

    selected = list(SUITES) if suite == SuiteName.ALL else [suite]
    results: List[CheckResult] = []
    for entry in selected:
        logger.info(f"Running suite {entry.value}")
        results.extend(SUITES[entry](options))
    return results
