"""Coefficient tensors: a list of bundles M_l = 1/2 sum t_{l,j,k} Delta_{jk}."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from shared.errors import InvalidArgumentError
from tools.combinatorics.rational import RationalLike, as_rational

Index = Tuple[int, int, int]


@dataclass(frozen=True)
class CoefficientTensor:
    """
    Coefficients t_{l,j,k} for factors l = 1..n and vertices j, k = 1..r.

    Only nonzero entries are stored, always with both (l, j, k) and
    (l, k, j). The 1/2 of the bundle normalization is applied by the
    engines, never stored here.
    """

    r: int
    n: int
    entries: Dict[Index, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.r < 1 or self.n < 1:
            raise InvalidArgumentError(
                f"Tensor needs r >= 1 and n >= 1, got r={self.r}, n={self.n}"
            )
        for (l, j, k), value in self.entries.items():
            self._check_index(l, j, k)
            if self.entries.get((l, k, j)) != value:
                raise InvalidArgumentError(f"Entry ({l}, {j}, {k}) has no symmetric partner")

    def _check_index(self, l: int, j: int, k: int) -> None:
        if not 1 <= l <= self.n:
            raise InvalidArgumentError(f"Factor index {l} outside 1..{self.n}")
        if not (1 <= j <= self.r and 1 <= k <= self.r):
            raise InvalidArgumentError(f"Vertex index ({j}, {k}) outside 1..{self.r}")

    @classmethod
    def from_entries(
        cls, r: int, n: int, entries: Iterable[Tuple[int, int, int, RationalLike]]
    ) -> "CoefficientTensor":
        """
        Build a tensor from (l, j, k, t) entries with symmetric completion.

        Omitted entries are zero. Giving both (l, j, k) and (l, k, j) is
        allowed as long as the values agree.

        Raises:
            InvalidArgumentError: On out-of-range indices or conflicting duplicates
        """
        stored: Dict[Index, Fraction] = {}
        template = cls(r, n)
        for l, j, k, t in entries:
            template._check_index(l, j, k)
            value = as_rational(t)
            for key in ((l, j, k), (l, k, j)):
                if key in stored and stored[key] != value:
                    raise InvalidArgumentError(
                        f"Conflicting values for t{key}: {stored[key]} and {value}"
                    )
                stored[key] = value
        return cls(r, n, {key: value for key, value in stored.items() if value != 0})

    @classmethod
    def from_matrices(
        cls, matrices: Sequence[Sequence[Sequence[RationalLike]]]
    ) -> "CoefficientTensor":
        """Build a tensor from one symmetric r x r matrix per factor."""
        if not matrices:
            raise InvalidArgumentError("At least one factor matrix is required")
        r = len(matrices[0])
        entries = []
        for l, matrix in enumerate(matrices, start=1):
            if len(matrix) != r or any(len(row) != r for row in matrix):
                raise InvalidArgumentError(f"Factor {l} is not a {r}x{r} matrix")
            for j, row in enumerate(matrix, start=1):
                entries.extend((l, j, k, value) for k, value in enumerate(row, start=1))
        return cls.from_entries(r, len(matrices), entries)

    def t(self, l: int, j: int, k: int) -> Fraction:
        """Entry t_{l,j,k}; absent entries are zero."""
        return self.entries.get((l, j, k), Fraction(0))

    def factor_matrix(self, l: int) -> List[List[Fraction]]:
        return [[self.t(l, j, k) for k in range(1, self.r + 1)] for j in range(1, self.r + 1)]

    def is_zero_factor(self, l: int) -> bool:
        return not any(key[0] == l for key in self.entries)

    def edge_weights(self, l: int) -> List[Tuple[Tuple[int, int], Fraction]]:
        """
        Weight of each unordered edge in 1/2 sum_{j,k} t_{l,j,k} (j, k).

        The ordered pairs (j, k) and (k, j) merge into t_{l,j,k} for j != k;
        a loop keeps 1/2 t_{l,j,j}.
        """
        weights = []
        for j in range(1, self.r + 1):
            for k in range(j, self.r + 1):
                value = self.t(l, j, k)
                if value:
                    weights.append(((j, k), value if j != k else value / 2))
        return weights

    def permute_factors(self, order: Sequence[int]) -> "CoefficientTensor":
        """New tensor whose factor l is the old factor order[l - 1]."""
        if sorted(order) != list(range(1, self.n + 1)):
            raise InvalidArgumentError(f"Not a permutation of 1..{self.n}: {list(order)}")
        position = {old: new for new, old in enumerate(order, start=1)}
        return CoefficientTensor(
            self.r, self.n, {(position[l], j, k): v for (l, j, k), v in self.entries.items()}
        )

    def relabel_vertices(self, mapping: Sequence[int]) -> "CoefficientTensor":
        """New tensor with t'_{l, p(j), p(k)} = t_{l,j,k}, where p(j) = mapping[j - 1]."""
        if sorted(mapping) != list(range(1, self.r + 1)):
            raise InvalidArgumentError(f"Not a permutation of 1..{self.r}: {list(mapping)}")
        return CoefficientTensor(
            self.r,
            self.n,
            {(l, mapping[j - 1], mapping[k - 1]): v for (l, j, k), v in self.entries.items()},
        )

    def scaled_factor(self, l: int, factor: RationalLike) -> "CoefficientTensor":
        """New tensor with factor l multiplied by a rational."""
        factor = as_rational(factor)
        return CoefficientTensor(
            self.r,
            self.n,
            {
                key: value * factor if key[0] == l else value
                for key, value in self.entries.items()
                if factor != 0 or key[0] != l
            },
        )
