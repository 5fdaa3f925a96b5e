"""Finite-support Puiseux polynomials, their valuation, and the rays P_x of 𝕋.

A series `f(t) = Σ c_a t^a` has rational exponents and nonzero rational coefficients (the field of complex
Puiseux series is modelled only through exact zero-testing). `Val(f) = −min{a : c_a ≠ 0}` and `Val(0) = −∞`.
Arithmetic happens in sympy's Puiseux ring over ℚ; exponents and coefficients leave it as `Fraction`s.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from sympy.polys.domains import QQ
from sympy.polys.puiseux import puiseux_ring

from .errors import NuValuationError
from .scalar import NEG_INF, Ordering, Rational, Tag, TropScalar, compare, real

SERIES_RING, _ = puiseux_ring("t", QQ)


def _to_qq(x: Rational) -> Any:
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _to_fraction(q: Any) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _normalized(element: Any) -> Any:
    # a cancelled sum keeps its denominator monomial, so zero is rebuilt from scratch
    return element if len(element) else SERIES_RING.zero


def _monomial(exponent: Rational, coefficient: Rational) -> Any:
    if coefficient == 0:
        return SERIES_RING.zero
    return SERIES_RING.from_dict({(_to_qq(exponent),): _to_qq(coefficient)})


class PuiseuxPoly:
    """Finite formal sum of terms `c t^a` with rational `a` and nonzero rational `c`.

    Repeated exponents are added up and cancelled terms disappear. Two series are equal when their terms are.
    """

    __slots__ = ("element",)

    def __init__(self, terms: Iterable[tuple[Rational, Rational]] = ()) -> None:
        element = SERIES_RING.zero
        for exponent, coefficient in terms:
            element = element + _monomial(exponent, coefficient)
        self.element = _normalized(element)

    @classmethod
    def from_element(cls, element: Any) -> "PuiseuxPoly":
        """Wrap an element of `SERIES_RING`."""
        series = cls()
        series.element = _normalized(element)
        return series

    @classmethod
    def from_terms(cls, terms: Mapping[Rational, Rational]) -> "PuiseuxPoly":
        """Build a series from a mapping exponent → coefficient."""
        return cls(terms.items())

    @property
    def terms(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """(exponent, coefficient) pairs sorted by exponent."""
        pairs = [(_to_fraction(e), _to_fraction(c)) for (e,), c in self.element.terms()]
        return tuple(sorted(pairs))

    @property
    def support(self) -> tuple[Fraction, ...]:
        """Exponents with a nonzero coefficient, ascending."""
        return tuple(e for e, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero series."""
        return len(self.element) == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"PuiseuxPoly({self.element!r})"

    def __add__(self, other: "PuiseuxPoly") -> "PuiseuxPoly":
        return series_add(self, other)

    def __mul__(self, other: "PuiseuxPoly") -> "PuiseuxPoly":
        return series_mul(self, other)

    def __neg__(self) -> "PuiseuxPoly":
        return series_neg(self)


def series_add(f: PuiseuxPoly, g: PuiseuxPoly) -> PuiseuxPoly:
    """Sum of two series; cancelled terms disappear."""
    return PuiseuxPoly.from_element(f.element + g.element)


def series_mul(f: PuiseuxPoly, g: PuiseuxPoly) -> PuiseuxPoly:
    """Product of two series."""
    return PuiseuxPoly.from_element(f.element * g.element)


def series_neg(f: PuiseuxPoly) -> PuiseuxPoly:
    """Negate every coefficient."""
    return PuiseuxPoly.from_element(-f.element)


def leading_term(f: PuiseuxPoly) -> PuiseuxPoly:
    """The term of lowest exponent, which alone determines the valuation; zero for the zero series."""
    return PuiseuxPoly(f.terms[:1])


def val(f: PuiseuxPoly) -> TropScalar:
    """Valuation `−min` of the exponents as a real, or −∞ for the zero series."""
    if f.is_zero:
        return NEG_INF
    return real(-min(_to_fraction(exponent) for (exponent,) in f.element.itermonoms()))


@dataclass(frozen=True, slots=True)
class Ray:
    """The set P_x: `{a}` for a real `a`, the ray `[−∞, a]` for `a^ν`, and `{−∞}` for −∞."""

    anchor: TropScalar

    def __contains__(self, v: TropScalar) -> bool:
        return ray_contains(self.anchor, v)


def ray_contains(x: TropScalar, v: TropScalar) -> bool:
    """Return whether the valuation value `v` lies in P_x.

    Raises:
        NuValuationError: If `v` is ν-tagged.
    """
    if v.tag is Tag.NU:
        raise NuValuationError(f"Valuation values lie in R̄, got {v}.")
    if x.tag is Tag.NU:
        return compare(v, real(x.value)) is not Ordering.GREATER
    return v == x
