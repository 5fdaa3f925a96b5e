from fractions import Fraction

from hypothesis import strategies as st

from semiring.matrix import TropMatrix
from semiring.poly import TropPoly
from semiring.scalar import NEG_INF, TropScalar, nu, real
from semiring.valuation import PuiseuxPoly


def rationals(bound: int = 20, max_denominator: int = 4) -> st.SearchStrategy[Fraction]:
    return st.builds(
        Fraction,
        st.integers(-bound * max_denominator, bound * max_denominator),
        st.integers(1, max_denominator),
    )


def reals(bound: int = 20) -> st.SearchStrategy[TropScalar]:
    return rationals(bound).map(real)


def scalars(bound: int = 20) -> st.SearchStrategy[TropScalar]:
    values = rationals(bound)
    return st.one_of(st.just(NEG_INF), values.map(real), values.map(nu))


def small_scalars() -> st.SearchStrategy[TropScalar]:
    """Few distinct values so ties, and therefore ν results, are frequent."""
    values = st.integers(-2, 2)
    return st.one_of(st.just(NEG_INF), values.map(real), values.map(nu))


def matrices(
    min_n: int = 1, max_n: int = 4, elements: st.SearchStrategy[TropScalar] | None = None
) -> st.SearchStrategy[TropMatrix]:
    elements = small_scalars() if elements is None else elements
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n).map(
            TropMatrix.from_rows
        )
    )


def rectangular(rows: int, cols: int) -> st.SearchStrategy[TropMatrix]:
    return st.lists(
        st.lists(small_scalars(), min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(TropMatrix.from_rows)


def polys(num_vars: int = 2, max_degree: int = 3) -> st.SearchStrategy[TropPoly]:
    exponents = st.tuples(*[st.integers(0, max_degree)] * num_vars)
    coefficients = st.one_of(reals(5), rationals(5).map(nu))
    return st.lists(st.tuples(exponents, coefficients), min_size=1, max_size=5).map(
        lambda terms: TropPoly(num_vars, tuple(terms))
    )


def series(max_terms: int = 4) -> st.SearchStrategy[PuiseuxPoly]:
    coefficients = rationals(5).filter(bool)
    return st.lists(st.tuples(rationals(5), coefficients), max_size=max_terms).map(
        lambda terms: PuiseuxPoly(tuple(terms))
    )
