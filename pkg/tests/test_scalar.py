from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linrec.errors import ParseError
from linrec.scalar import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    format_scalar,
    gen_binomial,
    parse_scalar,
    scalar_arith,
)

from conftest import gaussian_rationals


def test_norm_identity():
    assert scalar_arith(1 + I, 1 - I, "*") == 2


def test_additive_identity():
    a = GaussianRational(Fraction(3, 7), -2)
    assert scalar_arith(a, 0, "+") == a


def test_inverse_of_i():
    assert scalar_arith(1, I, "/") == -I


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        scalar_arith(1, ZERO, "/")


def test_canonical_components():
    x = GaussianRational(Fraction(4, 6), Fraction(-10, -4))
    assert x.re == Fraction(2, 3) and x.re.denominator == 3
    assert x.im == Fraction(5, 2)
    assert GaussianRational(0, 0) == ZERO and hash(GaussianRational(3)) == hash(3)


@pytest.mark.parametrize(
    "n, d, expected",
    [(5, 2, 10), (7, 0, 1), (-3, 0, 1), (0, 0, 1), (0, 3, 0), (3, 5, 0)],
)
def test_gen_binomial_small(n, d, expected):
    assert gen_binomial(n, d) == expected


def test_gen_binomial_negative_top():
    # falling factorial (-1)(-2)/2!
    assert gen_binomial(-1, 2) == Fraction((-1) * (-2), 2) == 1
    assert gen_binomial(-2, 3) == Fraction((-2) * (-3) * (-4), 6)


@given(st.integers(-30, 30), st.integers(1, 12))
def test_pascal_rule(n, d):
    assert gen_binomial(n, d) == gen_binomial(n - 1, d) + gen_binomial(n - 1, d - 1)


@given(gaussian_rationals(), gaussian_rationals(), gaussian_rationals())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO and a * ONE == a
    if b:
        assert (a / b) * b == a


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3/4", GaussianRational(Fraction(3, 4))),
        ("4/6", GaussianRational(Fraction(2, 3))),
        ("1/2+2/3i", GaussianRational(Fraction(1, 2), Fraction(2, 3))),
        ("i", I),
        ("-i", -I),
        ("2-i", 2 - I),
        ("−5", GaussianRational(-5)),
        ("+7/2-3/4i", GaussianRational(Fraction(7, 2), Fraction(-3, 4))),
        ("2/3i", GaussianRational(0, Fraction(2, 3))),
        (" 0 ", ZERO),
    ],
)
def test_parse(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize(
    "value, text",
    [(ZERO, "0"), (GaussianRational(-2), "-2"), (GaussianRational(Fraction(1, 2), Fraction(2, 3)), "1/2+2/3i"),
     (I, "i"), (-I, "-i"), (1 - I, "1-i"), (GaussianRational(0, Fraction(-3, 5)), "-3/5i")],
)
def test_format(value, text):
    assert format_scalar(value) == text


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("1/0", 2), ("abc", 0), ("1+2", 3), ("1/", 2), ("3i+1", 2), ("1+2i+3i", 4), ("−x", 3)],
)
def test_parse_errors_carry_byte_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_scalar(text)
    assert info.value.offset == offset


@given(gaussian_rationals(max_denominator=1000, bound=10**6))
def test_parse_format_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x
