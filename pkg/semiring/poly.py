"""Tropical polynomials over 𝕋 and their zero sets.

A polynomial is a finite set of monomials `α ⊙ λ_1^{i_1} ⊙ … ⊙ λ_n^{i_n}` with non-negative integer exponents.
Evaluating it at a point yields a ν-value exactly when the maximum is attained twice or through a ν coefficient,
which is how the corner locus becomes the zero set `Z(f) = {p : f(p) ∈ R̄^ν}`.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityMismatchError, EmptyBoxError, UnsupportedArityError, ZeroPolynomialError
from .scalar import NEG_INF, ZERO, Rational, TropScalar, add, as_scalar, is_ghost, mul, power, real, tprod, tsum

Exponents = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class TropPoly:
    """Polynomial in `num_vars` variables, monomials kept sorted by exponent vector.

    Duplicate exponent vectors are merged with ⊕ and −∞ coefficients are dropped at construction.
    """

    num_vars: int
    monomials: tuple[tuple[Exponents, TropScalar], ...]

    def __post_init__(self) -> None:
        """Validate exponents, merge duplicates and drop −∞ coefficients."""
        if self.num_vars < 1:
            raise ArityMismatchError(f"A polynomial needs at least one variable, got {self.num_vars}.")
        merged: dict[Exponents, TropScalar] = {}
        for exponents, coefficient in self.monomials:
            exponents = tuple(exponents)
            if len(exponents) != self.num_vars:
                raise ArityMismatchError(f"Exponent vector {exponents} does not have {self.num_vars} entries.")
            if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in exponents):
                raise ValueError(f"Exponents must be non-negative integers, got {exponents}.")
            merged[exponents] = add(merged.get(exponents, NEG_INF), as_scalar(coefficient))
        kept = tuple(sorted((e, c) for e, c in merged.items() if c != NEG_INF))
        if not kept:
            raise ZeroPolynomialError("Every coefficient of the polynomial is −∞.")
        object.__setattr__(self, "monomials", kept)

    @classmethod
    def from_terms(cls, num_vars: int, terms: Mapping[Exponents, "TropScalar | str | Rational"]) -> "TropPoly":
        """Build a polynomial from a mapping exponent vector → coefficient."""
        return cls(num_vars, tuple((tuple(e), as_scalar(c)) for e, c in terms.items()))

    @property
    def degree(self) -> int:
        """Largest total degree of a monomial."""
        return max(sum(e) for e, _ in self.monomials)

    def coefficient(self, exponents: Exponents) -> TropScalar:
        """Return the coefficient of a monomial, −∞ if absent."""
        return dict(self.monomials).get(tuple(exponents), NEG_INF)


def constant(c: "TropScalar | str | Rational", num_vars: int = 1) -> TropPoly:
    """The constant polynomial `c`."""
    return TropPoly(num_vars, (((0,) * num_vars, as_scalar(c)),))


def variable(k: int, num_vars: int) -> TropPoly:
    """The polynomial `λ_k` (0-based index)."""
    if not 0 <= k < num_vars:
        raise ArityMismatchError(f"Variable {k} out of range for {num_vars} variables.")
    return monomial(tuple(int(i == k) for i in range(num_vars)), ZERO)


def monomial(exponents: Sequence[int], coefficient: "TropScalar | str | Rational" = ZERO) -> TropPoly:
    """A single monomial."""
    return TropPoly(len(exponents), ((tuple(exponents), as_scalar(coefficient)),))


def _check_same_arity(f: TropPoly, g: TropPoly) -> None:
    if f.num_vars != g.num_vars:
        raise ArityMismatchError(f"Polynomials in {f.num_vars} and {g.num_vars} variables cannot be combined.")


def poly_add(f: TropPoly, g: TropPoly) -> TropPoly:
    """Monomial-wise ⊕ merge."""
    _check_same_arity(f, g)
    return TropPoly(f.num_vars, f.monomials + g.monomials)


def poly_mul(f: TropPoly, g: TropPoly) -> TropPoly:
    """Convolution: coefficients multiply with ⊙, exponents add."""
    _check_same_arity(f, g)
    return TropPoly(
        f.num_vars,
        tuple(
            (tuple(a + b for a, b in zip(ef, eg, strict=True)), mul(cf, cg))
            for ef, cf in f.monomials
            for eg, cg in g.monomials
        ),
    )


def poly_pow(f: TropPoly, k: int) -> TropPoly:
    """Return `f ⊙ … ⊙ f` (k ≥ 1 factors)."""
    if k < 1:
        raise ValueError(f"Polynomial power must be at least 1, got {k}.")
    result = f
    for _ in range(k - 1):
        result = poly_mul(result, f)
    return result


def _coerce_point(f: TropPoly, point: Sequence["TropScalar | str | Rational"]) -> tuple[TropScalar, ...]:
    if len(point) != f.num_vars:
        raise ArityMismatchError(f"Point has {len(point)} coordinates, polynomial has {f.num_vars} variables.")
    return tuple(as_scalar(p) for p in point)


def eval_poly(f: TropPoly, point: Sequence["TropScalar | str | Rational"]) -> TropScalar:
    """Evaluate `f` at a point of 𝕋^n.

    Factors with exponent 0 are omitted, so −∞ coordinates only matter where their variable occurs.

    Raises:
        ArityMismatchError: If the point does not have `num_vars` coordinates.
    """
    coords = _coerce_point(f, point)
    return tsum(
        mul(coefficient, tprod(power(x, e) for x, e in zip(coords, exponents, strict=True) if e))
        for exponents, coefficient in f.monomials
    )


def in_zero_set(f: TropPoly, point: Sequence["TropScalar | str | Rational"]) -> bool:
    """Return whether `f` evaluates into R̄^ν at `point`."""
    return is_ghost(eval_poly(f, point))


@dataclass(frozen=True, slots=True)
class LocusPoint:
    """One sampled real point and whether it lies in the zero set."""

    point: tuple[Fraction, ...]
    in_locus: bool


def _axis(low: Fraction, high: Fraction, step: Fraction) -> list[Fraction]:
    count = int((high - low) // step)
    return [low + k * step for k in range(count + 1)]


def corner_locus_grid(
    f: TropPoly, box: Sequence[tuple[Rational, Rational]], step: Rational
) -> list[LocusPoint]:
    """Classify the real points of a regular grid as inside or outside the zero set of `f`.

    Points are visited in row-major order (first coordinate outermost). Only sampled points are classified;
    nothing is certified between them.

    Args:
        f: Polynomial in one or two variables.
        box: Per-axis closed range `(low, high)`.
        step: Positive grid spacing.

    Returns:
        list[LocusPoint]: One record per grid point.

    Raises:
        UnsupportedArityError: If `f` has more than two variables.
        ArityMismatchError: If `box` does not have one range per variable.
        EmptyBoxError: If some range has `low > high`.
    """
    if f.num_vars > 2:
        raise UnsupportedArityError(f"Grid sampling supports 1 or 2 variables, got {f.num_vars}.")
    if len(box) != f.num_vars:
        raise ArityMismatchError(f"Box has {len(box)} ranges, polynomial has {f.num_vars} variables.")
    step = Fraction(step)
    if step <= 0:
        raise ValueError(f"Grid step must be positive, got {step}.")
    axes = []
    for low, high in box:
        low, high = Fraction(low), Fraction(high)
        if low > high:
            raise EmptyBoxError(f"Empty range [{low}, {high}].")
        axes.append(_axis(low, high, step))

    grid: Iterable[tuple[Fraction, ...]]
    if len(axes) == 1:
        grid = ((x,) for x in axes[0])
    else:
        grid = ((x, y) for x in axes[0] for y in axes[1])
    return [LocusPoint(point, in_zero_set(f, [real(c) for c in point])) for point in grid]
