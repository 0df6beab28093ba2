import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linrec import linalg
from linrec.errors import LengthMismatch
from linrec.sampling import random_recurrence
from linrec.scalar import ONE, ZERO, GaussianRational
from linrec.sequences import (
    RecurrenceSequence,
    berlekamp_massey,
    cauchy_product,
    gen_terms,
    hurwitz_product,
    product_recurrence,
    zeta,
)

from conftest import gaussian_rationals

FIB = RecurrenceSequence((1, 1), (0, 1))
ONES = RecurrenceSequence((1,), (1,))


def unit(n):
    return (ONE,) + (ZERO,) * (n - 1)


def test_gen_terms_examples():
    assert gen_terms(FIB, 5) == (0, 1, 1, 2, 3, 5)
    assert gen_terms(RecurrenceSequence((1,), (5,)), 3) == (5, 5, 5, 5)
    assert gen_terms(RecurrenceSequence.zero(), 2) == (0, 0, 0)


def test_gen_terms_satisfy_recurrence():
    rng = random.Random(1)
    for _ in range(20):
        s = random_recurrence(rng)
        z = gen_terms(s, 25)
        for n in range(s.order, 26):
            assert z[n] == sum((c * z[n - j] for j, c in enumerate(s.coeffs, 1)), ZERO)


def test_mismatched_recurrence_rejected():
    with pytest.raises(ValueError):
        RecurrenceSequence((1, 1), (0,))


def test_hurwitz_examples():
    x = gen_terms(FIB, 9)
    assert hurwitz_product(unit(10), x) == x
    assert hurwitz_product((1,) * 8, (1,) * 8) == tuple(2**n for n in range(8))
    assert hurwitz_product((0, 1, 0, 0), (0, 1, 0, 0)) == (0, 0, 2, 0)


def test_cauchy_examples():
    x = gen_terms(FIB, 9)
    assert cauchy_product(unit(10), x) == x
    assert cauchy_product((1,) * 8, (1,) * 8) == tuple(n + 1 for n in range(8))
    assert cauchy_product((0, 1, 0, 0, 0), (0, 1, 0, 0, 0)) == (0, 0, 1, 0, 0)


def test_products_reject_length_mismatch():
    with pytest.raises(LengthMismatch):
        hurwitz_product((1, 2), (1,))
    with pytest.raises(LengthMismatch):
        cauchy_product((1,), (1, 2))


prefixes = st.integers(1, 12).flatmap(
    lambda n: st.tuples(*(st.lists(gaussian_rationals(4, 5), min_size=n, max_size=n) for _ in range(3)))
)


@settings(max_examples=40, deadline=None)
@given(prefixes)
def test_products_commutative_associative_unital(xyz):
    x, y, z = xyz
    for mul in (hurwitz_product, cauchy_product):
        assert mul(x, y) == mul(y, x)
        assert mul(mul(x, y), z) == mul(x, mul(y, z))
        assert mul(unit(len(x)), x) == tuple(x)


def test_products_on_length_40_prefixes():
    rng = random.Random(7)
    for _ in range(3):
        x, y, z = (gen_terms(random_recurrence(rng, 3), 39) for _ in range(3))
        for mul in (hurwitz_product, cauchy_product):
            assert mul(x, y) == mul(y, x)
            assert mul(mul(x, y), z) == mul(x, mul(y, z))
            assert mul(unit(40), x) == x


@settings(max_examples=40, deadline=None)
@given(prefixes)
def test_zeta_is_algebra_map_hurwitz_to_cauchy(xyz):
    x, y, _ = xyz
    assert zeta(hurwitz_product(x, y)) == cauchy_product(zeta(x), zeta(y))
    assert zeta(zeta(x), "inverse") == tuple(x)


def test_zeta_examples():
    assert zeta((1, 1, 1, 1)) == (1, 1, Fraction(1, 2), Fraction(1, 6))
    assert zeta((0, 0, 0)) == (0, 0, 0)
    with pytest.raises(ValueError):
        zeta((1,), "sideways")


def test_bm_examples():
    fib = berlekamp_massey(gen_terms(FIB, 7))
    assert fib.order == 2 and fib.coeffs == (1, 1)
    pow2 = berlekamp_massey((1, 2, 4, 8, 16, 32))
    assert pow2.order == 1 and pow2.coeffs == (2,)
    assert berlekamp_massey((0, 0, 0, 0)).order == 0
    assert berlekamp_massey(()).order == 0


def _has_recurrence_of_order(x, L):
    """Oracle: does some z_n = sum_{j<=L} c_j z_{n-j} (n >= L) fit the prefix?"""
    rows = [[x[n - j] for j in range(1, L + 1)] for n in range(L, len(x))]
    rhs = [x[n] for n in range(L, len(x))]
    if not rows:
        return True
    columns = [[row[j] for row in rows] for j in range(L)]
    return linalg.in_column_span(columns, rhs)


@settings(max_examples=60, deadline=None)
@given(st.lists(gaussian_rationals(3, 3), min_size=0, max_size=9))
def test_bm_is_minimal_and_regenerates(x):
    rec = berlekamp_massey(x)
    if x:
        assert gen_terms(rec, len(x) - 1) == tuple(x)
    minimal = next(L for L in range(len(x) + 1) if _has_recurrence_of_order(x, L))
    assert rec.order == minimal


def test_bm_recovers_true_recurrence_from_2d_terms():
    rng = random.Random(3)
    for _ in range(20):
        s = random_recurrence(rng, 5)
        terms = gen_terms(s, 2 * s.order - 1)
        rec = berlekamp_massey(terms)
        assert rec.order <= s.order
        assert gen_terms(rec, 30) == gen_terms(s, 30)


def test_product_recurrence_group_law():
    rec = product_recurrence(ONES, ONES, "hurwitz")
    assert rec.order == 1 and rec.coeffs == (2,) and rec.initial == (1,)


def test_product_recurrence_cauchy_z_squared():
    z = RecurrenceSequence((0, 0), (0, 1))
    rec = product_recurrence(z, z, "cauchy")
    assert gen_terms(rec, 6) == (0, 0, 1, 0, 0, 0, 0)


def test_product_recurrence_fib_times_ones():
    rec = product_recurrence(FIB, ONES, "hurwitz")
    expected = hurwitz_product(gen_terms(FIB, 19), gen_terms(ONES, 19))
    assert gen_terms(rec, 19) == expected
    # sum C(n,k) F_k = F_{2n}
    assert expected == tuple(gen_terms(FIB, 38)[::2])


def test_product_recurrence_random_pairs():
    rng = random.Random(11)
    for _ in range(15):
        x, y = random_recurrence(rng, 3), random_recurrence(rng, 3)
        for mode, mul in (("hurwitz", hurwitz_product), ("cauchy", cauchy_product)):
            rec = product_recurrence(x, y, mode)
            assert gen_terms(rec, 24) == mul(gen_terms(x, 24), gen_terms(y, 24))


def test_product_with_zero_sequence():
    assert product_recurrence(FIB, RecurrenceSequence.zero(), "hurwitz").order == 0
    assert product_recurrence(RecurrenceSequence((1,), (0,)), FIB, "cauchy").order == 0


def test_zeta_image_of_ones_escapes_recurrences():
    scaled = zeta((1,) * 16)
    assert scaled == tuple(GaussianRational(1) / factorial(n) for n in range(16))
    orders = [berlekamp_massey(scaled[:m]).order for m in (4, 8, 12, 16)]
    assert all(a < b for a, b in zip(orders, orders[1:]))
    assert [berlekamp_massey((1,) * m).order for m in (4, 8, 12, 16)] == [1, 1, 1, 1]


def test_characteristic_polynomial():
    assert FIB.characteristic_polynomial() == (-1, -1, 1)
