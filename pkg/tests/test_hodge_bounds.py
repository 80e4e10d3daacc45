"""Tests for Hodge-index bounds."""

import random
from fractions import Fraction

import pytest

from shared.errors import InvalidArgumentError
from tools.heights import PullbackSpec, hyperelliptic_residue
from tools.hodge import (
    BoundMatrix,
    HodgeBounds,
    alternating_cycle_matrix,
    bound_search,
    build_constraint_tensor,
    build_hodge_tensor,
    candidate_grid,
    check_constraint,
    constraint_pairing,
    evaluate_candidate,
    hodge_form,
)
from tools.intersection import expand_bruteforce, intersect_geometric
from tools.symbolic import SymbolicValue, derive_phi_bound
from tools.verify.suites import random_constraint_matrix

ONES_2 = PullbackSpec((1, 1))
ONES_4 = PullbackSpec((1, 1, 1, 1))


def square_matrix(g):
    return BoundMatrix.from_rows([[1, g], [g, 1]])


class TestBoundMatrix:
    """Test the coefficient matrix."""

    def test_trace_and_off_diagonal(self):
        """Test both sums of the constraint."""
        matrix = BoundMatrix.from_rows([[1, 2], [2, "1/2"]])
        assert matrix.trace == Fraction(3, 2)
        assert matrix.off_diagonal_sum == 4

    def test_rejects_asymmetric(self):
        """Test asymmetric input raises."""
        with pytest.raises(InvalidArgumentError, match="not symmetric"):
            BoundMatrix.from_rows([[0, 1], [2, 0]])

    def test_rejects_wrong_shape(self):
        """Test non-square input raises."""
        with pytest.raises(InvalidArgumentError):
            BoundMatrix(2, ((Fraction(1),),))

    def test_constraint(self):
        """Test g sum t_jj = sum_{j!=k} t_jk."""
        assert check_constraint(square_matrix(3), 3)
        assert not check_constraint(square_matrix(3), 4)


class TestConstraintPairing:
    """Test the pairing of M with (f*L)^(r-1)."""

    def test_identity_at_genus_two(self):
        """Test r = 2, m = (1, 1), B = I, g = 2."""
        identity = BoundMatrix.from_rows([[1, 0], [0, 1]])
        assert constraint_pairing(ONES_2, identity, 2) == -16

    @pytest.mark.parametrize(
        ("m", "rows", "g"),
        [
            ((1, 1), [[1, 0], [0, 1]], 2),
            ((2, -1), [[0, 1], [1, "1/2"]], 3),
            ((1, 2, -1), [[1, 0, 2], [0, -1, 1], [2, 1, 0]], 4),
            ((3,), [[2]], 5),
        ],
    )
    def test_matches_engine(self, m, rows, g):
        """Test the closed form against the geometric engine."""
        spec, matrix = PullbackSpec(m), BoundMatrix.from_rows(rows)
        engine = intersect_geometric(build_constraint_tensor(spec, matrix), g)
        assert engine == constraint_pairing(spec, matrix, g)

    def test_zero_under_constraint(self):
        """Test the pairing vanishes exactly when the constraint holds."""
        assert constraint_pairing(ONES_2, square_matrix(3), 3) == 0
        assert constraint_pairing(ONES_2, square_matrix(3), 5) != 0

    def test_size_mismatch(self):
        """Test m and the matrix must agree in size."""
        with pytest.raises(InvalidArgumentError):
            constraint_pairing(PullbackSpec((1, 1, 1)), square_matrix(2), 2)


class TestHodgeForm:
    """Test the Hodge form and the bounds read off it."""

    @pytest.mark.parametrize(
        ("g", "ratio"), [(2, Fraction(1, 5)), (3, Fraction(2, 7)), (5, Fraction(4, 11))]
    )
    def test_square_family(self, g, ratio):
        """Test the r = 2 matrix gives (g-1)/(2g+1)."""
        value = hodge_form(ONES_2, square_matrix(g), g)
        g = Fraction(g)
        assert value.drop_hnt() == SymbolicValue(
            omega2=-4 * g**2 * (2 * g + 1) / (g - 1), phi=4 * g**2
        )
        assert derive_phi_bound(value.drop_hnt()) == ratio

    def test_square_family_matches_bruteforce(self):
        """Test the full value, h_NT included, against the graph expansion."""
        tensor = build_hodge_tensor(ONES_2, square_matrix(3))
        assert hodge_form(ONES_2, square_matrix(3), 3) == expand_bruteforce(tensor, 3)

    @pytest.mark.parametrize(("g", "ratio"), [(3, Fraction(1, 3)), (4, Fraction(38, 109))])
    def test_alternating_cycle(self, g, ratio):
        """Test the signed 4-cycle ratios."""
        value = hodge_form(ONES_4, alternating_cycle_matrix(4, ONES_4), g)
        assert value.scalar == 0
        assert derive_phi_bound(value.drop_hnt()) == ratio

    def test_vanishing_at_genus_two(self):
        """Test r = 4 at g = 2 vanishes modulo the hyperelliptic relation."""
        rng = random.Random(2)
        spec = PullbackSpec((1, -1, 2, 1))
        for _ in range(3):
            matrix = random_constraint_matrix(rng, 4, 2)
            value = hodge_form(spec, matrix, 2)
            assert value.scalar == 0
            assert value.hnt == 0
            assert hyperelliptic_residue(value, 2).is_zero

    def test_genus_two_value_is_not_identically_zero(self):
        """Test only the phi = 5/2 omega^2 relation makes the g = 2 value vanish."""
        matrix = random_constraint_matrix(random.Random(2), 4, 2)
        value = hodge_form(PullbackSpec((1, -1, 2, 1)), matrix, 2)
        assert not value.is_zero
        assert value.phi == -Fraction(2, 5) * value.omega2

    @pytest.mark.parametrize("factor", [2, -3, Fraction(1, 2)])
    def test_quadratic_in_matrix(self, factor):
        """Test scaling t by c scales the form by c^2."""
        matrix = random_constraint_matrix(random.Random(5), 3, 4)
        spec = PullbackSpec((1, 2, -1))
        scaled = hodge_form(spec, matrix.scale(factor), 4)
        assert scaled == hodge_form(spec, matrix, 4).scale(Fraction(factor) ** 2)

    def test_invariant_under_global_sign_flip(self):
        """Test m -> -m leaves the form unchanged."""
        matrix = random_constraint_matrix(random.Random(6), 3, 4)
        value = hodge_form(PullbackSpec((1, 2, -1)), matrix, 4)
        assert hodge_form(PullbackSpec((-1, -2, 1)), matrix, 4) == value


class TestAlternatingCycle:
    """Test the signed cycle matrix."""

    def test_entries(self):
        """Test halved alternating signs around the 4-cycle."""
        matrix = alternating_cycle_matrix(4)
        half = Fraction(1, 2)
        assert matrix.entry(1, 2) == -half
        assert matrix.entry(2, 3) == half
        assert matrix.entry(3, 4) == -half
        assert matrix.entry(1, 4) == half
        assert matrix.trace == 0
        assert check_constraint(matrix, 7)

    @pytest.mark.parametrize("r", [2, 5])
    def test_rejects_bad_size(self, r):
        """Test odd r and r < 4 are refused."""
        with pytest.raises(InvalidArgumentError):
            alternating_cycle_matrix(r)

    def test_rejects_mismatched_spec(self):
        """Test m must have length r."""
        with pytest.raises(InvalidArgumentError):
            alternating_cycle_matrix(4, ONES_2)


class TestBoundSearch:
    """Test candidate grids and the search."""

    def test_grid_size(self):
        """Test every upper triangle is produced once."""
        grid = list(candidate_grid(2, [0, 1, 1, 2]))
        assert len(grid) == 27
        assert len(set(grid)) == 27

    def test_best_in_grid(self):
        """Test the search finds the r = 2 matrix at g = 5."""
        result = bound_search(ONES_2, 5, candidate_grid(2, [0, 1, 5]))
        assert result is not None
        assert result.ratio == Fraction(4, 11)
        assert result.matrix == square_matrix(5)

    def test_ties_break_to_smallest_matrix(self):
        """Test equal ratios resolve the same way in any order and for any jobs."""
        big = square_matrix(5)
        small = big.scale(Fraction(1, 2))
        forward = bound_search(ONES_2, 5, [big, small])
        backward = bound_search(ONES_2, 5, [small, big], jobs=2)
        assert forward == backward
        assert forward.matrix == small
        assert forward.ratio == Fraction(4, 11)

    def test_no_candidate(self):
        """Test None when nothing bounds phi."""
        assert bound_search(ONES_2, 5, [BoundMatrix.from_rows([[0, 0], [0, 0]])]) is None
        assert bound_search(ONES_2, 5, []) is None

    def test_evaluate_candidate_checks_constraint(self):
        """Test constraint violations are skipped."""
        assert evaluate_candidate(ONES_2, square_matrix(3), 5) is None


class TestHodgeBounds:
    """Test the bound calculator for a fixed m and genus."""

    def test_evaluate_matches_functions(self):
        """Test evaluate returns the Hodge form and its ratio."""
        bounds = HodgeBounds(ONES_2, 3)
        ratio, value = bounds.evaluate(square_matrix(3))
        assert value == hodge_form(ONES_2, square_matrix(3), 3)
        assert ratio == Fraction(2, 7)
        assert bounds.pairing(square_matrix(3)) == 0

    def test_evaluate_rejects_constraint_violation(self):
        """Test an explicit matrix breaking the constraint raises."""
        with pytest.raises(InvalidArgumentError, match="Constraint fails"):
            HodgeBounds(ONES_2, 5).evaluate(square_matrix(3))

    def test_alternating(self):
        """Test the alternating matrix and its g = 4 ratio."""
        bounds = HodgeBounds(ONES_4, 4, jobs=2)
        assert bounds.alternating() == alternating_cycle_matrix(4, ONES_4)
        ratio, _ = bounds.evaluate(bounds.alternating())
        assert ratio == Fraction(38, 109)

    def test_search(self):
        """Test the grid search agrees with bound_search."""
        result = HodgeBounds(ONES_2, 5).search([0, 1, 5])
        assert result == bound_search(ONES_2, 5, candidate_grid(2, [0, 1, 5]))
        assert result.ratio == Fraction(4, 11)
