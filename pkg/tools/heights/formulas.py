"""
Closed formulas for tautological cycles Z_{m,alpha} in the Jacobian.

Pullbacks of the ample bundle along (x_1..x_r) -> sum m_j (x_j - alpha),
their geometric and arithmetic self-intersections, Neron-Tate height
coefficients, effective Bogomolov bounds and the local phi lower bound.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from shared.errors import InvalidArgumentError, OutOfRangeError, SingularGenusError
from shared.logger import get_logger
from tools.combinatorics.rational import RationalLike, as_rational, falling_factorial
from tools.intersection.tensor import CoefficientTensor
from tools.symbolic.values import InvariantValues, SymbolicValue, derive_phi_bound, evaluate_numeric

logger = get_logger(__name__)


@dataclass(frozen=True)
class CurveParams:
    """Genus g of the curve and degree d_K of its number field."""

    g: int
    d_K: int = 1

    def __post_init__(self) -> None:
        if self.g < 1:
            raise InvalidArgumentError(f"Genus must be at least 1, got {self.g}")
        if self.d_K < 1:
            raise InvalidArgumentError(f"d_K must be at least 1, got {self.d_K}")


@dataclass(frozen=True)
class PullbackSpec:
    """The multiplicity vector m of the map (x_1..x_r) -> sum m_j (x_j - alpha)."""

    m: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if not self.m:
            raise InvalidArgumentError("m needs at least one entry")
        if any(x == 0 for x in self.m):
            raise InvalidArgumentError(f"Every m_j must be nonzero, got {list(self.m)}")

    @classmethod
    def parse(cls, text: str) -> "PullbackSpec":
        """Parse a comma-separated integer list such as "1,-1,2"."""
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError:
            raise InvalidArgumentError(f"Expected comma-separated integers, got {text!r}") from None

    @property
    def r(self) -> int:
        return len(self.m)

    @property
    def linear_sum(self) -> int:
        return sum(self.m)

    @property
    def square_sum(self) -> int:
        return sum(x * x for x in self.m)

    @property
    def cross_sum(self) -> int:
        """sum over j != k of m_j m_k."""
        return self.linear_sum**2 - self.square_sum

    @property
    def square_product(self) -> int:
        return math.prod(x * x for x in self.m)


@dataclass(frozen=True)
class HeightCoefficients:
    """
    h'(Z_{m,alpha}) = prefactor * (a omega^2 + b phi + c h_NT(x_alpha)).

    Attributes:
        a: Coefficient of omega^2
        b: Coefficient of phi(X)
        c: Coefficient of h_NT(x_alpha)
        prefactor: (g - r) / (2 d_K)
    """

    a: Fraction
    b: Fraction
    c: Fraction
    prefactor: Fraction

    def assemble(self) -> SymbolicValue:
        return SymbolicValue(omega2=self.a, phi=self.b, hnt=self.c).scale(self.prefactor)


def pullback_tensor(spec: PullbackSpec, n_factors: int) -> CoefficientTensor:
    """Tensor of n copies of the pullback bundle, t_{l,j,k} = -m_j m_k."""
    if n_factors < 1:
        raise InvalidArgumentError(f"Need at least one factor, got {n_factors}")
    matrix = [[-mj * mk for mk in spec.m] for mj in spec.m]
    return CoefficientTensor.from_matrices([matrix] * n_factors)


def auxiliary_tensor(spec: PullbackSpec) -> CoefficientTensor:
    """r copies of A = -1/2 sum m_j^2 Delta_{jj}: diagonal t_{l,j,j} = -m_j^2."""
    matrix = [[-spec.m[j] ** 2 if j == k else 0 for k in range(spec.r)] for j in range(spec.r)]
    return CoefficientTensor.from_matrices([matrix] * spec.r)


def geometric_self_intersection(spec: PullbackSpec, params: CurveParams) -> Fraction:
    """<(f*L)^r> = r! (g)_r prod m_j^2."""
    r = spec.r
    return math.factorial(r) * falling_factorial(params.g, r) * spec.square_product


def arithmetic_self_intersection(spec: PullbackSpec, params: CurveParams) -> SymbolicValue:
    """
    <(f*L)^(r+1)> = ((r+1)! prod m_j^2 / 24) (a' omega^2 + b' phi + c' h_NT).

    a' = 3g (g-2)_{r-1}/(g-1) sum m_j^2 - (2g+1)(g-3)_{r-2}/(g-1) sum_{j!=k} m_j m_k
    b' = 2 (g-3)_{r-2} sum_{j!=k} m_j m_k
    c' = 12 (g-1)_r (sum m_j)^2

    Raises:
        SingularGenusError: If g < 2
    """
    g, r = params.g, spec.r
    if g < 2:
        raise SingularGenusError(f"Arithmetic self-intersection needs g >= 2, got {g}")
    cross = spec.cross_sum
    a = (
        3 * g * falling_factorial(g - 2, r - 1) * spec.square_sum
        - (2 * g + 1) * falling_factorial(g - 3, r - 2) * cross
    ) / (g - 1)
    b = 2 * falling_factorial(g - 3, r - 2) * cross
    c = 12 * falling_factorial(g - 1, r) * spec.linear_sum**2
    front = Fraction(math.factorial(r + 1) * spec.square_product, 24)
    return SymbolicValue(omega2=a, phi=b, hnt=c).scale(front)


def height_coefficients(spec: PullbackSpec, params: CurveParams) -> HeightCoefficients:
    """
    Coefficients of the Neron-Tate height of Z_{m,alpha}.

    Args:
        spec: Multiplicities m, r = len(m)
        params: Genus and field degree

    Returns:
        HeightCoefficients; the prefactor vanishes for r = g

    Raises:
        OutOfRangeError: If r > g
        SingularGenusError: If g < 2
        InvalidArgumentError: If r >= 2 and g = 2
    """
    g, r = params.g, spec.r
    if r > g:
        raise OutOfRangeError(f"Heights need r <= g, got r={r}, g={g}")
    if g < 2:
        raise SingularGenusError(f"Heights need g >= 2, got {g}")
    prefactor = Fraction(g - r, 2 * params.d_K)

    if r == 1:
        m2 = spec.square_sum
        return HeightCoefficients(
            a=Fraction(m2, 4 * (g - 1) ** 2), b=Fraction(0), c=Fraction(m2, g), prefactor=prefactor
        )
    if g == 2:
        raise InvalidArgumentError("The r >= 2 coefficients have a pole at g = 2")
    pairs = Fraction(spec.cross_sum, 2)
    a = Fraction(spec.square_sum, 4 * (g - 1) ** 2) - (2 * g + 1) * pairs / (
        6 * g * (g - 1) ** 2 * (g - 2)
    )
    b = pairs / (3 * g * (g - 1) * (g - 2))
    c = Fraction(spec.linear_sum**2, g)
    return HeightCoefficients(a=a, b=b, c=c, prefactor=prefactor)


def neron_tate_height(
    spec: PullbackSpec, params: CurveParams, invariants: InvariantValues
) -> Fraction:
    """
    Numeric height <(f*L)^(r+1)> / (d_K (r+1) <(f*L)^r>).

    For r = g >= 3 the arithmetic term is identically zero. For r = g = 2 it
    is zero only on hyperelliptic curves, which every genus 2 curve is, so 0
    is returned there whatever invariants are passed.

    Raises:
        OutOfRangeError: If r > g, where the geometric degree vanishes
    """
    r, g = spec.r, params.g
    if r > g:
        raise OutOfRangeError(f"Heights need r <= g, got r={r}, g={g}")
    if r == g == 2:
        return Fraction(0)
    arithmetic = evaluate_numeric(arithmetic_self_intersection(spec, params), invariants)
    return arithmetic / (params.d_K * (r + 1) * geometric_self_intersection(spec, params))


def bogomolov_bound(spec: PullbackSpec, params: CurveParams) -> Fraction:
    """
    Lower bound for the height of Z_{m,alpha} as a multiple of phi(X).

    Raises:
        OutOfRangeError: If r >= g
    """
    g, r, d = params.g, spec.r, params.d_K
    if r >= g:
        raise OutOfRangeError(f"Bogomolov bounds need r < g, got r={r}, g={g}")
    if r == 1:
        return Fraction(spec.square_sum, 8 * d * (2 * g + 1))
    numerator = (g - r) * (
        (3 * g * g - 8 * g - 1) * spec.square_sum + (2 * g + 1) * spec.linear_sum**2
    )
    return Fraction(numerator, 24 * g * (g - 1) * (g - 2) * (2 * g + 1) * d)


def phi_local_lower_bound(
    g: int, delta0: RationalLike, deltas: Sequence[RationalLike] = ()
) -> Fraction:
    """
    Lower bound for phi(X_v) at a place with delta_0 non-separating and
    delta_j separating double points of type j:

        (g-1)/(2g(7g+5)) delta_0 + sum_j 2j(g-j)/g delta_j

    Args:
        g: Genus, at least 2
        delta0: Number of non-separating double points
        deltas: delta_1 .. delta_k with k <= g // 2

    Raises:
        InvalidArgumentError: On g < 2, too many deltas or a negative delta
    """
    if g < 2:
        raise InvalidArgumentError(f"Local bound needs g >= 2, got {g}")
    if len(deltas) > g // 2:
        raise InvalidArgumentError(f"At most {g // 2} separating types for g={g}")
    values = [as_rational(delta0)] + [as_rational(d) for d in deltas]
    if any(v < 0 for v in values):
        raise InvalidArgumentError("Double point counts must be nonnegative")
    bound = Fraction(g - 1, 2 * g * (7 * g + 5)) * values[0]
    for j, delta in enumerate(values[1:], start=1):
        bound += Fraction(2 * j * (g - j), g) * delta
    return bound


def height_positivity_bound(spec: PullbackSpec, params: CurveParams) -> Optional[Fraction]:
    """
    Ratio rho with omega^2 >= rho phi(X), read off h'(Z_{m,alpha}) >= 0 at
    alpha = omega / (2g - 2).

    For sum m_j = 0 this is 2 / (3g - 1).

    Raises:
        OutOfRangeError: Unless 2 <= r < g
    """
    r, g = spec.r, params.g
    if not 2 <= r < g:
        raise OutOfRangeError(f"Height positivity bound needs 2 <= r < g, got r={r}, g={g}")
    height = height_coefficients(spec, params).assemble().drop_hnt()
    return derive_phi_bound(-height)


def zhang_conjectural_ratio(g: int) -> Fraction:
    """The conjectured optimal ratio (2g - 2)/(2g + 1) in omega^2 >= rho phi(X)."""
    if g < 2:
        raise InvalidArgumentError(f"Needs g >= 2, got {g}")
    return Fraction(2 * g - 2, 2 * g + 1)


def hyperelliptic_invariants(g: int, omega2: RationalLike) -> InvariantValues:
    """Invariants of a hyperelliptic curve at alpha = omega/(2g-2): phi = (2g+1)/(2g-2) omega^2."""
    if g < 2:
        raise InvalidArgumentError(f"Needs g >= 2, got {g}")
    omega2 = as_rational(omega2)
    return InvariantValues(omega2, Fraction(2 * g + 1, 2 * g - 2) * omega2, Fraction(0))


def hyperelliptic_residue(value: SymbolicValue, g: int) -> SymbolicValue:
    """
    Reduce a value modulo phi = (2g+1)/(2g-2) omega^2.

    The phi part is folded into omega^2; scalar and h_NT parts are kept, so
    the result is zero exactly when the value vanishes on every hyperelliptic
    curve of genus g for every alpha.
    """
    omega2 = evaluate_numeric(
        SymbolicValue(omega2=value.omega2, phi=value.phi), hyperelliptic_invariants(g, 1)
    )
    return SymbolicValue(scalar=value.scalar, omega2=omega2, hnt=value.hnt)


def is_big(spec: PullbackSpec, params: CurveParams) -> bool:
    """Whether the pullback of L is big, i.e. <(f*L)^r> > 0."""
    return geometric_self_intersection(spec, params) > 0


def auxiliary_volume(spec: PullbackSpec, params: CurveParams) -> Fraction:
    """<A^r> = r! g^r prod m_j^2 for A = -1/2 sum m_j^2 Delta_{jj}."""
    r = spec.r
    return Fraction(math.factorial(r) * params.g**r * spec.square_product)
