from fractions import Fraction

import pytest
from hypothesis import given

from commands.relations import check_homomorphic_relation
from semiring.errors import NuValuationError
from semiring.scalar import NEG_INF, ZERO, nu, real
from semiring.valuation import SERIES_RING, PuiseuxPoly, Ray, leading_term, ray_contains, val
from tests.strategies import rationals, series


def test_val():
    assert val(PuiseuxPoly.from_terms({-2: 1, 1: 3})) == real(2)
    assert val(PuiseuxPoly.from_terms({0: 5})) == ZERO
    assert val(PuiseuxPoly.from_terms({Fraction(1, 2): -1})) == real(Fraction(-1, 2))
    assert val(PuiseuxPoly()) == NEG_INF


def test_construction_merges_terms():
    f = PuiseuxPoly(((1, 2), (1, -2), (3, 1), (0, 0)))
    assert f.terms == ((Fraction(3), Fraction(1)),)
    assert f.support == (Fraction(3),)
    assert PuiseuxPoly(((1, 2), (1, -2))).is_zero


def test_arithmetic():
    f = PuiseuxPoly.from_terms({1: 1, 2: 1})
    g = PuiseuxPoly.from_terms({1: -1})
    assert f + g == PuiseuxPoly.from_terms({2: 1})
    assert f * g == PuiseuxPoly.from_terms({2: -1, 3: -1})
    assert (f + -f).is_zero
    assert leading_term(f) == PuiseuxPoly.from_terms({1: 1})
    assert leading_term(PuiseuxPoly()).is_zero


def test_arithmetic_with_fractional_and_negative_exponents():
    f = PuiseuxPoly.from_terms({Fraction(1, 2): 2, -1: 1})
    g = PuiseuxPoly.from_terms({Fraction(1, 3): 3})
    assert f * g == PuiseuxPoly.from_terms({Fraction(5, 6): 6, Fraction(-2, 3): 3})
    assert val(f * g) == real(Fraction(2, 3))
    assert f + -f == PuiseuxPoly()
    assert PuiseuxPoly.from_terms({-1: 1}) * PuiseuxPoly.from_terms({1: 1}) == PuiseuxPoly.from_terms({0: 1})
    assert (f * g).element.ring == SERIES_RING
    assert len({f, PuiseuxPoly(f.terms)}) == 1


@pytest.mark.parametrize(
    ("anchor", "v", "expected"),
    [
        (real(2), real(2), True),
        (real(2), real(1), False),
        (nu(2), real(1), True),
        (nu(2), real(2), True),
        (nu(2), real(3), False),
        (nu(2), NEG_INF, True),
        (NEG_INF, NEG_INF, True),
        (NEG_INF, real(0), False),
    ],
)
def test_ray_contains(anchor, v, expected):
    assert ray_contains(anchor, v) is expected
    assert (v in Ray(anchor)) is expected


def test_ray_contains_rejects_nu_values():
    with pytest.raises(NuValuationError):
        ray_contains(real(1), nu(1))


def _included(x, y, values):
    return all(v in Ray(y) for v in values if v in Ray(x))


@given(rationals(), rationals(), rationals())
def test_nu_rays_are_nested_by_anchor(a, b, v):
    values = [NEG_INF, real(a), real(b), real(v), real(a - 1), real(b + 1)]
    proper = _included(nu(a), nu(b), values) and not _included(nu(b), nu(a), values)
    assert proper is (a < b)


@given(rationals(), rationals())
def test_points_lie_inside_their_nu_ray(a, v):
    values = [NEG_INF, real(a), real(v), real(a - 1), real(a + 1)]
    assert _included(NEG_INF, nu(a), values)
    assert _included(real(a), nu(a), values)
    assert not _included(nu(a), real(a), values)
    assert not _included(nu(a), NEG_INF, values)


def test_relation_survives_cancellation():
    f = PuiseuxPoly.from_terms({1: 1, 2: 1})
    g = PuiseuxPoly.from_terms({1: -1})
    report = check_homomorphic_relation(f, g, seed=3, index=4)
    assert report.passed
    assert report.witness is None
    assert (report.seed, report.index) == (3, 4)
    assert check_homomorphic_relation(f, -f).passed


def test_relation_without_cancellation():
    f = PuiseuxPoly.from_terms({-1: 2})
    g = PuiseuxPoly.from_terms({1: 5})
    assert val(f + g) == val(f) + val(g) == real(1)
    assert check_homomorphic_relation(f, g).passed


@given(series(), series())
def test_val_is_multiplicative(f, g):
    assert val(f * g) == val(f) * val(g)


@given(series(), series())
def test_val_is_a_homomorphic_relation(f, g):
    assert check_homomorphic_relation(f, g).passed
