"""Exact values over the basis {1, omega^2, phi(X), h_NT(x_alpha)}."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from shared.errors import InvalidArgumentError
from tools.combinatorics.rational import RationalLike, as_rational, format_fraction

FIELD_NAMES = ("scalar", "omega2", "phi", "hnt")


@dataclass(frozen=True)
class SymbolicValue:
    """
    A 4-vector of rationals.

    Attributes:
        scalar: Coefficient of 1
        omega2: Coefficient of the self-intersection of the dualizing sheaf
        phi: Coefficient of Zhang's invariant phi(X)
        hnt: Coefficient of the Neron-Tate height h_NT(x_alpha)
    """

    scalar: Fraction = Fraction(0)
    omega2: Fraction = Fraction(0)
    phi: Fraction = Fraction(0)
    hnt: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in FIELD_NAMES:
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def of_scalar(cls, value: RationalLike) -> "SymbolicValue":
        """Pure scalar value."""
        return cls(scalar=as_rational(value))

    def components(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.scalar, self.omega2, self.phi, self.hnt)

    @property
    def is_zero(self) -> bool:
        return not any(self.components())

    @property
    def is_scalar(self) -> bool:
        return not (self.omega2 or self.phi or self.hnt)

    def __add__(self, other: "SymbolicValue") -> "SymbolicValue":
        return SymbolicValue(*(a + b for a, b in zip(self.components(), other.components())))

    def __sub__(self, other: "SymbolicValue") -> "SymbolicValue":
        return SymbolicValue(*(a - b for a, b in zip(self.components(), other.components())))

    def __neg__(self) -> "SymbolicValue":
        return self.scale(-1)

    def scale(self, factor: RationalLike) -> "SymbolicValue":
        """Multiply every component by a rational."""
        factor = as_rational(factor)
        return SymbolicValue(*(factor * a for a in self.components()))

    def multiply(self, other: "SymbolicValue") -> "SymbolicValue":
        """
        Product in the value algebra.

        Only defined when at least one factor is a pure scalar, which is
        always the case for products over graph components.

        Raises:
            InvalidArgumentError: If both factors carry non-scalar parts
        """
        if self.is_scalar:
            return other.scale(self.scalar)
        if other.is_scalar:
            return self.scale(other.scalar)
        raise InvalidArgumentError("Product of two non-scalar values is not defined")

    def drop_hnt(self) -> "SymbolicValue":
        """Value at alpha = omega/(2g-2), where h_NT(x_alpha) vanishes."""
        return SymbolicValue(self.scalar, self.omega2, self.phi, Fraction(0))

    def to_fields(self) -> Dict[str, str]:
        """Field name -> fraction text, in basis order."""
        return {name: format_fraction(value) for name, value in zip(FIELD_NAMES, self.components())}


ZERO = SymbolicValue()


@dataclass(frozen=True)
class InvariantValues:
    """
    Numeric stand-ins for omega^2, phi(X) and h_NT(x_alpha).

    No positivity is enforced here.
    """

    omega2_val: Fraction = Fraction(0)
    phi_val: Fraction = Fraction(0)
    hnt_val: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("omega2_val", "phi_val", "hnt_val"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> "InvariantValues":
        """
        Parse "omega2=..,phi=..,hnt=.." assignments; omitted names are zero.

        Raises:
            InvalidArgumentError: On unknown names, repeats or malformed fractions
        """
        values: Dict[str, Fraction] = {}
        for item in filter(None, (part.strip() for part in text.split(","))):
            name, sep, raw = item.partition("=")
            name = name.strip()
            if not sep or name not in ("omega2", "phi", "hnt"):
                raise InvalidArgumentError(f"Expected omega2=, phi= or hnt=, got {item!r}")
            if name in values:
                raise InvalidArgumentError(f"{name} given twice")
            values[name] = as_rational(raw)
        return cls(*(values.get(name, Fraction(0)) for name in ("omega2", "phi", "hnt")))


def linear_combine(terms: Iterable[Tuple[RationalLike, SymbolicValue]]) -> SymbolicValue:
    """Exact sum of c_i * v_i."""
    total = ZERO
    for coefficient, value in terms:
        total = total + value.scale(coefficient)
    return total


def evaluate_numeric(value: SymbolicValue, invariants: InvariantValues) -> Fraction:
    """Substitute numeric invariants into a symbolic value."""
    return (
        value.scalar
        + value.omega2 * invariants.omega2_val
        + value.phi * invariants.phi_val
        + value.hnt * invariants.hnt_val
    )


def derive_phi_bound(value: SymbolicValue) -> Optional[Fraction]:
    """
    Read 0 >= A*omega^2 + B*phi as omega^2 >= (B / -A) * phi.

    The h_NT component is ignored (alpha = omega/(2g-2)).

    Returns:
        The ratio B / -A when A < 0, otherwise None

    Raises:
        InvalidArgumentError: If the scalar component is nonzero
    """
    if value.scalar != 0:
        raise InvalidArgumentError("A bound can only be read off a value with zero scalar part")
    if value.omega2 < 0:
        return value.phi / -value.omega2
    return None
