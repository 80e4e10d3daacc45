"""Tests for the intersection engines."""

import random
from fractions import Fraction

import pytest

from shared.errors import CrossCheckError, InvalidArgumentError, SingularGenusError
from shared.parallel import split_chunks
from tools.intersection import (
    CoefficientTensor,
    IntersectionEngine,
    arithmetic_coefficients,
    expand_bruteforce,
    intersect_arithmetic,
    intersect_geometric,
    verify_identity,
)
from tools.heights import PullbackSpec, pullback_tensor
from tools.symbolic import ZERO, SymbolicValue
from tools.verify.suites import pullback_sums, random_tensor


def loop_tensor(t, factors=1):
    """Single vertex, every factor t * Delta_11 / 2."""
    return CoefficientTensor.from_matrices([[[t]]] * factors)


class TestCoefficientTensor:
    """Test tensor construction and transformations."""

    def test_symmetric_completion(self):
        """Test one triangle entry fills its partner."""
        tensor = CoefficientTensor.from_entries(2, 1, [(1, 1, 2, "3/2")])
        assert tensor.t(1, 2, 1) == Fraction(3, 2)
        assert tensor.t(1, 1, 1) == 0

    def test_consistent_duplicates_allowed(self):
        """Test giving both orientations with the same value."""
        tensor = CoefficientTensor.from_entries(2, 1, [(1, 1, 2, 1), (1, 2, 1, 1)])
        assert tensor.t(1, 1, 2) == 1

    def test_conflicting_duplicates(self):
        """Test differing values for (l, j, k) and (l, k, j) raise."""
        with pytest.raises(InvalidArgumentError, match="Conflicting"):
            CoefficientTensor.from_entries(2, 1, [(1, 1, 2, 1), (1, 2, 1, 2)])

    @pytest.mark.parametrize("entry", [(2, 1, 1, 1), (1, 3, 1, 1), (0, 1, 1, 1)])
    def test_index_range(self, entry):
        """Test out-of-range indices raise."""
        with pytest.raises(InvalidArgumentError):
            CoefficientTensor.from_entries(2, 1, [entry])

    def test_zero_entries_dropped(self):
        """Test explicit zeros are not stored."""
        tensor = CoefficientTensor.from_entries(2, 1, [(1, 1, 1, 0), (1, 1, 2, 0)])
        assert tensor.entries == {}
        assert tensor.is_zero_factor(1)

    def test_unsymmetric_entries_rejected(self):
        """Test the raw constructor checks symmetry."""
        with pytest.raises(InvalidArgumentError, match="symmetric"):
            CoefficientTensor(2, 1, {(1, 1, 2): Fraction(1)})

    def test_edge_weights(self):
        """Test off-diagonal pairs merge and loops are halved."""
        tensor = CoefficientTensor.from_matrices([[[2, 3], [3, 0]]])
        assert tensor.edge_weights(1) == [((1, 1), Fraction(1)), ((1, 2), Fraction(3))]

    def test_permute_and_relabel(self):
        """Test factor permutation and vertex relabeling move entries."""
        tensor = CoefficientTensor.from_entries(2, 2, [(1, 1, 1, 5), (2, 1, 2, 7)])
        swapped = tensor.permute_factors([2, 1])
        assert swapped.t(1, 1, 2) == 7
        assert swapped.t(2, 1, 1) == 5
        relabeled = tensor.relabel_vertices([2, 1])
        assert relabeled.t(1, 2, 2) == 5
        with pytest.raises(InvalidArgumentError):
            tensor.permute_factors([1, 1])

    def test_scaled_factor(self):
        """Test scaling one factor, and scaling to zero."""
        tensor = CoefficientTensor.from_entries(1, 2, [(1, 1, 1, 2), (2, 1, 1, 3)])
        assert tensor.scaled_factor(2, "1/3").t(2, 1, 1) == 1
        assert tensor.scaled_factor(1, 0).is_zero_factor(1)


class TestGeometric:
    """Test the closed geometric sum."""

    @pytest.mark.parametrize("g", [1, 2, Fraction(7, 2)])
    def test_single_loop(self, g):
        """Test <t/2 Delta_11> = -g t."""
        assert intersect_geometric(loop_tensor(4), g) == -4 * Fraction(g)

    def test_pullback_r2(self):
        """Test the r = 2 pullback at g = 3 and its vanishing at g = 1."""
        tensor = CoefficientTensor.from_matrices([[[-1, -1], [-1, -1]]] * 2)
        assert intersect_geometric(tensor, 3) == 12
        assert intersect_geometric(tensor, 1) == 0

    def test_wrong_factor_count(self):
        """Test n != r is refused."""
        with pytest.raises(InvalidArgumentError):
            intersect_geometric(loop_tensor(1, factors=2), 2)

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_matches_bruteforce(self, r):
        """Test agreement with the graph expansion on random tensors."""
        rng = random.Random(r)
        for g in (2, 5):
            tensor = random_tensor(rng, r, r)
            assert expand_bruteforce(tensor, g) == SymbolicValue.of_scalar(
                intersect_geometric(tensor, g)
            )


class TestArithmetic:
    """Test the closed arithmetic sum."""

    def test_single_vertex(self):
        """Test the figure-eight value of two pullback factors at g = 3."""
        value = intersect_arithmetic(loop_tensor(-1, factors=2), 3)
        assert value == SymbolicValue(omega2=Fraction(3, 8), hnt=2)

    def test_singular_genus(self):
        """Test g = 0 and g = 1 are refused."""
        for g in (0, 1):
            with pytest.raises(SingularGenusError):
                intersect_arithmetic(loop_tensor(1, factors=2), g)

    def test_wrong_factor_count(self):
        """Test n != r + 1 is refused."""
        with pytest.raises(InvalidArgumentError):
            arithmetic_coefficients(loop_tensor(1), 2)

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_matches_bruteforce(self, r):
        """Test agreement with the graph expansion on random tensors."""
        rng = random.Random(10 + r)
        for g in (2, 3):
            tensor = random_tensor(rng, r, r + 1)
            assert intersect_arithmetic(tensor, g) == expand_bruteforce(tensor, g)

    @pytest.mark.parametrize(("m", "g"), [((1,), 3), ((1, -1), 4), ((2, 1), 5)])
    def test_pullback_coefficients(self, m, g):
        """Test c1, c2, c3 of pullback tensors against their closed forms."""
        spec = PullbackSpec(m)
        coefficients = arithmetic_coefficients(pullback_tensor(spec, spec.r + 1), g)
        assert coefficients == pullback_sums(spec, g)
        assert coefficients.c2 == coefficients.c3

    def test_scalar_part_zero(self):
        """Test the arithmetic value never carries a scalar part."""
        tensor = random_tensor(random.Random(4), 2, 3)
        assert intersect_arithmetic(tensor, 5).scalar == 0

    def test_invariant_under_permutations(self):
        """Test factor order and vertex labels do not change the value."""
        tensor = random_tensor(random.Random(8), 2, 3)
        moved = tensor.permute_factors([3, 1, 2]).relabel_vertices([2, 1])
        assert intersect_arithmetic(moved, 4) == intersect_arithmetic(tensor, 4)

    def test_parallel_matches_serial(self):
        """Test jobs does not change the result."""
        tensor = random_tensor(random.Random(5), 2, 3)
        assert intersect_arithmetic(tensor, 3, jobs=2) == intersect_arithmetic(tensor, 3)
        assert expand_bruteforce(tensor, 3, jobs=2) == expand_bruteforce(tensor, 3)


class TestBruteforce:
    """Test the multilinear expansion."""

    def test_zero_factor(self):
        """Test a zero factor gives zero without expanding."""
        tensor = CoefficientTensor.from_entries(1, 2, [(1, 1, 1, 1)])
        assert expand_bruteforce(tensor, 3) == ZERO

    def test_other_factor_counts_vanish(self):
        """Test n outside {r, r+1} gives zero."""
        assert expand_bruteforce(loop_tensor(1, factors=3), 3) == ZERO


class TestIntersectionEngine:
    """Test dispatch on the factor count and the oracle check."""

    def test_geometric_dispatch(self):
        """Test n = r goes to the geometric sum."""
        tensor = pullback_tensor(PullbackSpec((1, -1)), 2)
        value = IntersectionEngine(4).intersect(tensor)
        assert value == SymbolicValue.of_scalar(intersect_geometric(tensor, 4))

    def test_arithmetic_dispatch_with_oracle(self):
        """Test n = r + 1 goes to the arithmetic sum and agrees with brute force."""
        tensor = pullback_tensor(PullbackSpec((1, 2)), 3)
        engine = IntersectionEngine(Fraction(7, 2), jobs=2)
        assert engine.intersect(tensor, oracle=True) == intersect_arithmetic(tensor, Fraction(7, 2))

    def test_other_factor_counts_rejected(self):
        """Test n outside {r, r+1} is an error."""
        with pytest.raises(InvalidArgumentError, match="Need r or r \\+ 1 factors"):
            IntersectionEngine(3).intersect(loop_tensor(1, factors=3))

    def test_oracle_disagreement(self, monkeypatch):
        """Test a disagreeing brute force raises CrossCheckError."""
        monkeypatch.setattr(IntersectionEngine, "bruteforce", lambda self, tensor: ZERO)
        with pytest.raises(CrossCheckError):
            IntersectionEngine(3).intersect(pullback_tensor(PullbackSpec((1,)), 2), oracle=True)


class TestVerifyIdentity:
    """Test multi-point identity checks."""

    def test_equal(self):
        """Test an identity of degree 2 checked at 3 points."""
        report = verify_identity(lambda g: g * g - 1, lambda g: (g - 1) * (g + 1), [1, 2, 3], 2)
        assert report.equal
        assert report.checked == (1, 2, 3)
        assert report.mismatch is None

    def test_mismatch(self):
        """Test the first disagreement is reported."""
        report = verify_identity(lambda g: g * g, lambda g: g, [0, 1, 2, 3])
        assert not report.equal
        assert report.mismatch == (Fraction(2), Fraction(4), Fraction(2))

    def test_too_few_points(self):
        """Test a degree bound needs more distinct points."""
        with pytest.raises(InvalidArgumentError):
            verify_identity(lambda g: g, lambda g: g, [1, 1, 2], degree_bound=2)


class TestSplitChunks:
    """Test work splitting."""

    def test_contiguous_and_complete(self):
        """Test chunks keep order and cover every item."""
        chunks = split_chunks(list(range(10)), 3)
        assert len(chunks) == 3
        assert [x for chunk in chunks for x in chunk] == list(range(10))

    def test_more_parts_than_items(self):
        """Test never more chunks than items."""
        assert split_chunks([1, 2], 8) == [[1], [2]]
