"""The extended tropical semiring 𝕋 = ℝ ∪ {−∞} ∪ ℝ^ν.

Elements are immutable `TropScalar` values carrying an exact rational. The ν copy ℝ^ν records additive
multiplicity: `a ⊕ a = a^ν`. The order ≺ of 𝕋 is total on distinct elements; note that the non-strict
comparison ⪯ is only meaningful in the classical sense when both sides are reals or both are ν-values.
"""

import re
from collections.abc import Iterable
from dataclasses import dataclass
from enum import IntEnum, StrEnum
from fractions import Fraction
from functools import reduce, total_ordering

from .errors import DivisionByNegInfError, InvalidMaxPlusElementError, NegativePowerError, ParseError

Rational = int | Fraction

_LITERAL = re.compile(r"^(?P<num>-?\d+(?:/\d+|\.\d+)?)(?P<nu>v?)$")


class Tag(StrEnum):
    """Which of the three pieces of 𝕋 an element lives in."""

    NEG_INF = "neginf"
    REAL = "real"
    NU = "nu"


class Ordering(IntEnum):
    """Outcome of comparing two elements of 𝕋 under ≺."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


@total_ordering
@dataclass(frozen=True, slots=True)
class TropScalar:
    """One element of 𝕋.

    Attributes:
        tag: `Tag.REAL`, `Tag.NU` or `Tag.NEG_INF`.
        value: Exact rational in lowest terms; `None` exactly when the tag is `Tag.NEG_INF`.
    """

    tag: Tag
    value: Fraction | None = None

    def __post_init__(self) -> None:
        """Validate the tag/value pair and normalize the value to a `Fraction`."""
        if self.tag is Tag.NEG_INF:
            if self.value is not None:
                raise ValueError("−∞ carries no value.")
            return
        if isinstance(self.value, bool) or not isinstance(self.value, int | Fraction):
            raise TypeError(f"Scalar value must be an exact rational, got {type(self.value).__name__}.")
        object.__setattr__(self, "value", Fraction(self.value))

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, TropScalar):
            return NotImplemented
        return compare(self, other) is Ordering.LESS

    def __add__(self, other: object) -> "TropScalar":
        if not isinstance(other, TropScalar):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other: object) -> "TropScalar":
        if not isinstance(other, TropScalar):
            return NotImplemented
        return mul(self, other)

    def __truediv__(self, other: object) -> "TropScalar":
        if not isinstance(other, TropScalar):
            return NotImplemented
        return div(self, other)

    def __pow__(self, n: int) -> "TropScalar":
        return power(self, n)

    def __neg__(self) -> "TropScalar":
        return neg(self)

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"TropScalar({format_scalar(self)!r})"


NEG_INF = TropScalar(Tag.NEG_INF)
ZERO = TropScalar(Tag.REAL, Fraction(0))


def real(a: Rational) -> TropScalar:
    """Return the real element `a`."""
    return TropScalar(Tag.REAL, Fraction(a))


def nu(a: Rational) -> TropScalar:
    """Return the ν-element `a^ν`."""
    return TropScalar(Tag.NU, Fraction(a))


def is_real(x: TropScalar) -> bool:
    """Return whether `x` is a real, neither ν-tagged nor −∞."""
    return x.tag is Tag.REAL


def is_nu(x: TropScalar) -> bool:
    """Return whether `x` lies in ℝ^ν."""
    return x.tag is Tag.NU


def is_neginf(x: TropScalar) -> bool:
    """Return whether `x` is −∞."""
    return x.tag is Tag.NEG_INF


def is_ghost(x: TropScalar) -> bool:
    """Return whether `x` lies in R̄^ν = ℝ^ν ∪ {−∞}."""
    return x.tag is not Tag.REAL


def nu_value(x: TropScalar) -> Fraction | None:
    """Return the rational underlying the ν-value of `x`, or `None` for −∞."""
    return x.value


def _key(x: TropScalar) -> tuple:
    if x.tag is Tag.NEG_INF:
        return (0,)
    return (1, x.value, 1 if x.tag is Tag.NU else 0)


def compare(x: TropScalar, y: TropScalar) -> Ordering:
    """Compare two elements under the total order ≺.

    −∞ is below everything else; distinct rationals compare as rationals regardless of tags; for equal
    rationals `a ≺ a^ν`.

    Args:
        x: Left operand.
        y: Right operand.

    Returns:
        Ordering: `LESS`, `EQUAL` (structural equality) or `GREATER`.
    """
    kx, ky = _key(x), _key(y)
    if kx < ky:
        return Ordering.LESS
    if kx > ky:
        return Ordering.GREATER
    return Ordering.EQUAL


def add(x: TropScalar, y: TropScalar) -> TropScalar:
    """Tropical addition ⊕: the ≺-maximum, except that equal elements sum to their ν-value."""
    if x.tag is Tag.NEG_INF:
        return y
    if y.tag is Tag.NEG_INF:
        return x
    if x == y:
        return nu_project(x)
    return x if compare(x, y) is Ordering.GREATER else y


def mul(x: TropScalar, y: TropScalar) -> TropScalar:
    """Tropical multiplication ⊙: rational addition, −∞ annihilates, any ν operand makes the result ν."""
    if x.tag is Tag.NEG_INF or y.tag is Tag.NEG_INF:
        return NEG_INF
    tag = Tag.NU if Tag.NU in (x.tag, y.tag) else Tag.REAL
    return TropScalar(tag, x.value + y.value)


def neg(x: TropScalar) -> TropScalar:
    """Negate the rational of `x`, keeping its tag (`−(a^ν) = (−a)^ν`).

    Raises:
        DivisionByNegInfError: `x` is −∞, which has no negative.
    """
    if x.tag is Tag.NEG_INF:
        raise DivisionByNegInfError("−∞ has no multiplicative inverse.")
    return TropScalar(x.tag, -x.value)


def div(x: TropScalar, y: TropScalar) -> TropScalar:
    """Tropical division `x ⊘ y = x ⊙ (−y)`.

    Raises:
        DivisionByNegInfError: If `y` is −∞.
    """
    if y.tag is Tag.NEG_INF:
        raise DivisionByNegInfError(f"Cannot divide {format_scalar(x)} by −∞.")
    return mul(x, neg(y))


def power(x: TropScalar, n: int) -> TropScalar:
    """Return the n-fold ⊙ product of `x`.

    `x^0` is the multiplicative unit 0 for every `x ≠ −∞`.

    Raises:
        NegativePowerError: If `n < 0`, or if `n == 0` and `x` is −∞.
    """
    if n < 0:
        raise NegativePowerError(f"Exponent must be non-negative, got {n}.")
    if x.tag is Tag.NEG_INF:
        if n == 0:
            raise NegativePowerError("(−∞)^0 is undefined.")
        return NEG_INF
    if n == 0:
        return ZERO
    return TropScalar(x.tag, n * x.value)


def tsum(xs: Iterable[TropScalar]) -> TropScalar:
    """Fold ⊕ over `xs`; the empty sum is −∞."""
    return reduce(add, xs, NEG_INF)


def tprod(xs: Iterable[TropScalar]) -> TropScalar:
    """Fold ⊙ over `xs`; the empty product is 0."""
    return reduce(mul, xs, ZERO)


def nu_project(x: TropScalar) -> TropScalar:
    """The projection ν onto R̄^ν: `a ↦ a^ν`, `a^ν ↦ a^ν`, `−∞ ↦ −∞`."""
    if x.tag is Tag.REAL:
        return TropScalar(Tag.NU, x.value)
    return x


def pi_project(x: TropScalar) -> TropScalar:
    """The epimorphism π onto (R̄, max, +): forgets the ν tag."""
    if x.tag is Tag.NU:
        return TropScalar(Tag.REAL, x.value)
    return x


def theta_embed(x: TropScalar) -> TropScalar:
    """The embedding θ of (R̄, max, +) into R̄^ν: `a ↦ a^ν`, `−∞ ↦ −∞`.

    Raises:
        InvalidMaxPlusElementError: If `x` is ν-tagged and therefore not an element of R̄.
    """
    if x.tag is Tag.NU:
        raise InvalidMaxPlusElementError(f"{format_scalar(x)} is not an element of (R̄, max, +).")
    return nu_project(x)


def _check_maxplus(x: TropScalar) -> None:
    if x.tag is Tag.NU:
        raise InvalidMaxPlusElementError(f"{format_scalar(x)} is not an element of (R̄, max, +).")


def maxplus_add(x: TropScalar, y: TropScalar) -> TropScalar:
    """Idempotent addition `max` of (R̄, max, +)."""
    _check_maxplus(x)
    _check_maxplus(y)
    return x if compare(x, y) is not Ordering.LESS else y


def maxplus_mul(x: TropScalar, y: TropScalar) -> TropScalar:
    """Multiplication `+` of (R̄, max, +)."""
    _check_maxplus(x)
    _check_maxplus(y)
    return mul(x, y)


def parse_scalar(text: str) -> TropScalar:
    """Parse a scalar literal: `-inf`, a rational (`3`, `-1/2`, `2.5`) or a rational followed by `v`.

    Decimal literals are converted exactly.

    Raises:
        ParseError: If `text` does not follow the literal grammar.
    """
    stripped = text.strip()
    if stripped == "-inf":
        return NEG_INF
    match = _LITERAL.match(stripped)
    if match is None:
        raise ParseError(f"Invalid scalar literal: {text!r}")
    try:
        value = Fraction(match["num"])
    except ZeroDivisionError as e:
        raise ParseError(f"Zero denominator in scalar literal: {text!r}") from e
    return TropScalar(Tag.NU if match["nu"] else Tag.REAL, value)


def format_scalar(x: TropScalar) -> str:
    """Serialize `x` with the literal grammar, rationals in lowest terms."""
    if x.tag is Tag.NEG_INF:
        return "-inf"
    return f"{x.value}{'v' if x.tag is Tag.NU else ''}"


def as_scalar(x: "TropScalar | str | Rational") -> TropScalar:
    """Coerce a literal string or a rational into a `TropScalar`; scalars pass through."""
    if isinstance(x, TropScalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return real(x)
