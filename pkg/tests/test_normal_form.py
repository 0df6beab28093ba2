import random
from fractions import Fraction
from math import factorial

import pytest

from linrec.errors import NonSplitCharPoly, ZeroElement
from linrec.hopf_checks import (
    check_antipode,
    check_coassociativity,
    check_counit,
    check_defining_property,
)
from linrec.normal_form import (
    NormalForm,
    TensorSum,
    nf_antipode,
    nf_comul,
    nf_counit,
    nf_eval,
    nf_from_recurrence,
    nf_mul,
    nf_to_recurrence,
    nf_truncate,
)
from linrec.polynomial import from_roots, pmul, roots_over_gaussian_rationals
from linrec.sampling import random_normal_form
from linrec.scalar import I, ONE, ZERO, GaussianRational
from linrec.sequences import RecurrenceSequence, gen_terms, hurwitz_product

N = 16
XI = NormalForm.xi()
EPS = NormalForm.epsilon()


def phi(lam):
    return NormalForm.phi(lam)


def brute_values(f, count=N):
    """Value table of f built only from xi = (0,1,0,...), lam^n and Hurwitz products."""
    xi_table = tuple(ONE if n == 1 else ZERO for n in range(count))
    total = [ZERO] * count
    for (k, lam), c in f.terms.items():
        table = tuple(GaussianRational(lam) ** n if n else ONE for n in range(count))
        for _ in range(k):
            table = hurwitz_product(xi_table, table)
        total = [t + c * v for t, v in zip(total, table)]
    return tuple(total)


def values(f, count=N):
    return tuple(nf_eval(f, n) for n in range(count))


def test_eval_examples():
    assert values(XI) == tuple(1 if n == 1 else 0 for n in range(N))
    assert values(phi(2)) == tuple(2**n for n in range(N))
    assert values(NormalForm.basis(1, 1)) == tuple(range(N))
    assert values(EPS) == (1,) + (0,) * (N - 1)


def test_eval_formula_matches_convolution_oracle():
    rng = random.Random(5)
    for _ in range(40):
        f = random_normal_form(rng, max_support=4, max_k=4)
        assert values(f) == brute_values(f)


def test_mul_examples():
    assert nf_mul(phi(1), phi(1)) == phi(2)
    assert nf_mul(XI, XI) == NormalForm.xi(2)
    f = NormalForm([((2, I), 3), ((0, -1), Fraction(1, 2))])
    assert nf_mul(EPS, f) == f


def test_mul_matches_hurwitz_product_of_values():
    rng = random.Random(9)
    for _ in range(25):
        f, g = random_normal_form(rng), random_normal_form(rng)
        assert values(nf_mul(f, g), 24) == hurwitz_product(values(f, 24), values(g, 24))
        assert nf_mul(f, g) == nf_mul(g, f)


def test_counit_examples():
    assert nf_counit(phi(GaussianRational(3, -2))) == 1
    assert nf_counit(XI) == 0
    assert nf_counit(phi(1) - EPS - XI) == 0


def test_counit_multiplicative_and_equal_to_first_term():
    rng = random.Random(2)
    for _ in range(30):
        f, g = random_normal_form(rng), random_normal_form(rng)
        assert nf_counit(nf_mul(f, g)) == nf_counit(f) * nf_counit(g)
        assert nf_counit(f) == nf_eval(f, 0)


def test_antipode_examples():
    assert nf_antipode(phi(1)) == phi(-1)
    assert nf_antipode(XI) == -XI
    rng = random.Random(4)
    for _ in range(30):
        f, g = random_normal_form(rng), random_normal_form(rng)
        assert nf_antipode(nf_antipode(f)) == f
        assert nf_antipode(nf_mul(f, g)) == nf_mul(nf_antipode(f), nf_antipode(g))


def test_antipode_is_precomposition_with_x_to_minus_x():
    # S(f)(X^n) = f((-X)^n) = (-1)^n f(X^n)
    rng = random.Random(6)
    for _ in range(20):
        f = random_normal_form(rng)
        assert values(nf_antipode(f)) == tuple((-1) ** n * v for n, v in enumerate(values(f)))


def test_comul_examples():
    lam = GaussianRational(2, 1)
    assert nf_comul(phi(lam)) == TensorSum({((0, lam), (0, lam)): 1})
    assert nf_comul(XI) == TensorSum({((1, 0), (0, 0)): 1, ((0, 0), (1, 0)): 1})
    assert nf_comul(EPS) == TensorSum({((0, 0), (0, 0)): 1})


def test_hopf_axioms_on_random_elements():
    rng = random.Random(8)
    for _ in range(20):
        f = random_normal_form(rng)
        assert check_coassociativity(f)
        assert check_counit(f)
        assert check_antipode(f)
        assert check_defining_property(f, 12)


def test_checks_detect_a_broken_element():
    # a TensorSum that is not Delta(f) must fail the defining property test
    f = XI
    bad = TensorSum({((1, 0), (0, 0)): 1})
    from linrec import hopf_checks

    original = hopf_checks.nf_comul
    hopf_checks.nf_comul = lambda g: bad
    try:
        assert not hopf_checks.check_defining_property(f, 4)
        assert not hopf_checks.check_counit(f)
    finally:
        hopf_checks.nf_comul = original


def test_from_recurrence_examples():
    assert nf_from_recurrence(RecurrenceSequence((2,), (1,))) == phi(2)
    assert nf_from_recurrence(RecurrenceSequence((2, -1), (0, 1))) == NormalForm.basis(1, 1)
    assert nf_from_recurrence(RecurrenceSequence.zero()) == NormalForm.zero()


def test_from_recurrence_fibonacci_does_not_split():
    with pytest.raises(NonSplitCharPoly) as info:
        nf_from_recurrence(RecurrenceSequence((1, 1), (0, 1)))
    assert info.value.residual == (-1, -1, 1)


def test_from_recurrence_gaussian_roots():
    # z_n = i^n + n (-i)^(n-1) ... char poly (x - i)(x + i)^2
    f = NormalForm([((0, I), 1), ((1, -I), 1), ((0, -I), Fraction(-1, 2))])
    s = nf_to_recurrence(f)
    assert nf_from_recurrence(s) == f


def test_from_recurrence_root_zero():
    # (1, 0, 0, ...) is epsilon = xi^0 phi_0; (0, 0, 5, 5, 5, ...) mixes roots 0 and 1
    assert nf_from_recurrence(RecurrenceSequence((0,), (1,))) == EPS
    s = RecurrenceSequence((1, 0, 0), (0, 0, 5))
    f = nf_from_recurrence(s)
    assert values(f, 10) == gen_terms(s, 9)
    assert {lam for _, lam in f.support()} == {ZERO, ONE}


def test_to_recurrence_examples():
    s = nf_to_recurrence(phi(2))
    assert s.coeffs == (2,) and s.initial == (1,)
    s = nf_to_recurrence(NormalForm.basis(1, 1))
    assert s.coeffs == (2, -1) and s.initial == (0, 1)
    with pytest.raises(ZeroElement):
        nf_to_recurrence(NormalForm.zero())


def test_round_trips():
    rng = random.Random(12)
    for _ in range(30):
        f = random_normal_form(rng)
        s = nf_to_recurrence(f)
        assert gen_terms(s, 20) == values(f, 21)
        assert nf_from_recurrence(s) == f


def test_truncate_examples():
    phi1 = phi(1)
    assert nf_truncate(phi1, 3) == EPS + XI + NormalForm.xi(2) * Fraction(1, 2)
    assert nf_truncate(NormalForm.xi(2), 2) == NormalForm.zero()


def test_truncate_agrees_on_first_values():
    rng = random.Random(13)
    for _ in range(20):
        f = random_normal_form(rng)
        for n in range(8):
            diff = f - nf_truncate(f, n)
            assert all(nf_eval(diff, m) == 0 for m in range(n))


def test_split_polynomial_roots():
    roots = [GaussianRational(Fraction(1, 2), Fraction(-3, 4)), I, I, GaussianRational(-3), ZERO]
    found, residual = roots_over_gaussian_rationals(from_roots(roots))
    assert residual == (ONE,)
    assert found == {roots[0]: 1, I: 2, GaussianRational(-3): 1, ZERO: 1}


def test_non_split_polynomial_keeps_residual():
    p = pmul(from_roots([2]), (1, 0, 1))  # (x - 2)(x^2 + 1) splits: roots +-i
    found, residual = roots_over_gaussian_rationals(p)
    assert residual == (ONE,) and set(found) == {GaussianRational(2), I, -I}
    p = pmul(from_roots([Fraction(1, 3)]), (-2, 0, 1))  # x^2 - 2 stays
    found, residual = roots_over_gaussian_rationals(p)
    assert found == {GaussianRational(Fraction(1, 3)): 1}
    assert residual == (-2, 0, 1)
