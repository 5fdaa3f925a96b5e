from fractions import Fraction

import pytest
from hypothesis import given

from semiring.errors import DivisionByNegInfError, InvalidMaxPlusElementError, NegativePowerError, ParseError
from semiring.scalar import (
    NEG_INF,
    ZERO,
    Ordering,
    Tag,
    TropScalar,
    add,
    compare,
    div,
    format_scalar,
    is_ghost,
    maxplus_add,
    mul,
    neg,
    nu,
    nu_project,
    parse_scalar,
    pi_project,
    power,
    real,
    theta_embed,
    tprod,
    tsum,
)
from tests.strategies import scalars, small_scalars


def test_compare_follows_the_order_axioms():
    assert compare(NEG_INF, nu(5)) is Ordering.LESS
    assert compare(real(3), nu(3)) is Ordering.LESS
    assert compare(nu(1), real(2)) is Ordering.LESS
    assert compare(nu(2), real(2)) is Ordering.GREATER
    assert compare(real(Fraction(1, 2)), real(Fraction(2, 4))) is Ordering.EQUAL


def test_operators_follow_compare():
    assert real(3) < nu(3)
    assert NEG_INF < real(-100)
    assert sorted([nu(2), real(2), NEG_INF, real(1)]) == [NEG_INF, real(1), real(2), nu(2)]


@pytest.mark.parametrize(
    ("x", "y", "expected"),
    [
        (real(3), real(3), nu(3)),
        (NEG_INF, nu(7), nu(7)),
        (real(3), nu(3), nu(3)),
        (nu(3), nu(3), nu(3)),
        (real(4), nu(3), real(4)),
        (NEG_INF, NEG_INF, NEG_INF),
    ],
)
def test_add(x, y, expected):
    assert add(x, y) == expected
    assert x + y == expected


@pytest.mark.parametrize(
    ("x", "y", "expected"),
    [
        (real(2), real(3), real(5)),
        (nu(2), real(3), nu(5)),
        (NEG_INF, nu(3), NEG_INF),
        (real(Fraction(1, 2)), real(Fraction(1, 3)), real(Fraction(5, 6))),
    ],
)
def test_mul(x, y, expected):
    assert mul(x, y) == expected
    assert x * y == expected


def test_div_negates_and_keeps_the_tag():
    assert div(real(4), real(1)) == real(3)
    assert div(real(4), nu(1)) == nu(3)
    assert div(NEG_INF, real(2)) == NEG_INF
    assert real(4) / nu(1) == nu(3)
    assert -nu(2) == nu(-2)


def test_div_by_neginf_raises():
    with pytest.raises(DivisionByNegInfError):
        div(real(1), NEG_INF)
    with pytest.raises(DivisionByNegInfError):
        neg(NEG_INF)


def test_power():
    assert power(real(2), 3) == real(6)
    assert power(nu(2), 2) == nu(4)
    assert power(NEG_INF, 5) == NEG_INF
    assert power(nu(7), 0) == ZERO
    assert real(-1) ** 4 == real(-4)


@pytest.mark.parametrize(("x", "n"), [(real(1), -1), (NEG_INF, 0)])
def test_power_rejects(x, n):
    with pytest.raises(NegativePowerError):
        power(x, n)


def test_structure_maps():
    assert nu_project(real(3)) == nu(3)
    assert nu_project(nu(3)) == nu(3)
    assert nu_project(NEG_INF) == NEG_INF
    assert pi_project(nu(3)) == real(3)
    assert pi_project(real(3)) == real(3)
    assert pi_project(NEG_INF) == NEG_INF
    assert theta_embed(real(3)) == nu(3)
    assert theta_embed(NEG_INF) == NEG_INF
    with pytest.raises(InvalidMaxPlusElementError):
        theta_embed(nu(3))


def test_maxplus_add_is_idempotent_and_rejects_ghosts():
    assert maxplus_add(real(2), real(2)) == real(2)
    assert maxplus_add(NEG_INF, real(-1)) == real(-1)
    with pytest.raises(InvalidMaxPlusElementError):
        maxplus_add(nu(1), real(0))


def test_cancellation_fails():
    assert nu(0) * real(1) == nu(0) * nu(1)
    assert real(1) != nu(1)


def test_folds():
    assert tsum([]) == NEG_INF
    assert tprod([]) == ZERO
    assert tsum([real(1), real(2), real(2)]) == nu(2)
    assert tprod([real(1), nu(2), real(-1)]) == nu(2)


def test_structural_equality():
    assert real(3) != nu(3)
    assert real(Fraction(6, 4)) == real(Fraction(3, 2))
    assert hash(real(3)) == hash(TropScalar(Tag.REAL, Fraction(3)))


def test_constructor_rejects_floats_and_neginf_values():
    with pytest.raises(TypeError):
        TropScalar(Tag.REAL, 0.5)
    with pytest.raises(TypeError):
        TropScalar(Tag.NU, True)
    with pytest.raises(ValueError, match="no value"):
        TropScalar(Tag.NEG_INF, Fraction(1))


def test_operators_reject_other_types():
    with pytest.raises(TypeError):
        real(1) + 1


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("3", real(3)),
        ("-1/2", real(Fraction(-1, 2))),
        ("2.5v", nu(Fraction(5, 2))),
        ("-inf", NEG_INF),
        ("4/6", real(Fraction(2, 3))),
        (" 7v ", nu(7)),
    ],
)
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["", "v", "1e3", "inf", "1/0", "3vv", "--1", "0.1.2"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_format_scalar_is_canonical():
    assert format_scalar(real(Fraction(4, 6))) == "2/3"
    assert format_scalar(nu(-3)) == "-3v"
    assert format_scalar(NEG_INF) == "-inf"
    assert parse_scalar("2.50v") == parse_scalar(format_scalar(nu(Fraction(5, 2))))


@given(scalars(), scalars(), scalars())
def test_semiring_laws(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + NEG_INF == x
    assert x * NEG_INF == NEG_INF
    assert x * ZERO == x


@given(small_scalars(), small_scalars(), small_scalars())
def test_semiring_laws_with_frequent_ties(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z


@given(scalars(), scalars())
def test_sum_is_max_or_ghost(x, y):
    assert x + x == nu_project(x)
    assert x + y in (x, y, nu_project(x))
    assert (x == y) == (compare(x, y) is Ordering.EQUAL)


@given(small_scalars(), small_scalars())
def test_freshman_dream(x, y):
    for n in range(1, 9):
        assert (x + y) ** n == x**n + y**n


@given(scalars(), scalars())
def test_projections_are_homomorphisms(x, y):
    assert nu_project(x) == theta_embed(pi_project(x))
    assert pi_project(x + y) == maxplus_add(pi_project(x), pi_project(y))
    assert nu_project(x * y) == nu_project(x) * nu_project(y)
    assert nu_project(x + y) == nu_project(x) + nu_project(y)
    assert is_ghost(nu_project(x))


@given(scalars())
def test_literals_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


def _quoted_max(x: TropScalar, y: TropScalar) -> TropScalar:
    # addition where equal elements cancel to −∞ and distinct ones take the maximum
    if x == y:
        return NEG_INF
    return max(x, y)


def test_cancelling_max_is_not_associative():
    a, b = real(2), real(1)
    assert _quoted_max(b, _quoted_max(a, a)) == b
    assert _quoted_max(_quoted_max(b, a), a) == NEG_INF
