"""Acceptance criteria 1-9, each at its stated size and with exact equality.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import json
import random

import pytest

from linrec.cli import run
from linrec.filtration import GroupAlgebraElement, aug_power_member, aug_power_member_bruteforce, cauchy_jdeg, ideg, jdeg, witness
from linrec.genfun import PowerSeriesTrunc, egf_trunc, h_series, ogf_from_recurrence, ordinary_series, series_mul
from linrec.hopf_checks import CHECKS, check_defining_property
from linrec.normal_form import nf_mul, nf_to_recurrence, nf_truncate, nf_values
from linrec.sampling import random_group_element, random_ideal_element, random_normal_form, random_recurrence
from linrec.scalar import ZERO
from linrec.sequences import berlekamp_massey, gen_terms, hurwitz_product, zeta

criterion = pytest.mark.criterion


@criterion(1, "separation: witness rows (n, n, 1) for n = 1..10")
def test_separation_table():
    result = run(["--json", "witness", "--max-n", "10"])
    assert result.exit_code == 0
    rows = json.loads(result.render())
    assert [(r["n"], r["ideg"], r["jdeg"]) for r in rows] == [(n, n, 1) for n in range(1, 11)]


@criterion(2, "augmentation-ideal pin for phi_1 - eps")
def test_augmentation_pin():
    g = GroupAlgebraElement({1: 1, 0: -1})
    assert aug_power_member(g, 1) is True
    assert aug_power_member(g, 2) is False


@criterion(3, "witness identity egf(w_n) = Z^n h_n, n = 1..6, order 20")
def test_witness_identity():
    for n in range(1, 7):
        assert egf_trunc(witness(n), 20) == series_mul(PowerSeriesTrunc.monomial(n, 20), h_series(n, 20))


@criterion(4, "Hopf axioms on 50 random normal forms")
def test_hopf_axioms():
    rng = random.Random(4)
    failures = []
    for i in range(50):
        f = random_normal_form(rng, max_support=5)
        for name, check in CHECKS.items():
            ok = check_defining_property(f, bound=12) if name == "defining_property" else check(f)
            if not ok:
                failures.append((i, name, str(f)))
    assert failures == []


@criterion(5, "representation coherence: products, egf, omega identity")
def test_representation_coherence():
    rng = random.Random(5)
    failures = []
    for i in range(50):
        f, g = random_normal_form(rng), random_normal_form(rng)
        if nf_values(nf_mul(f, g), 40) != hurwitz_product(nf_values(f, 40), nf_values(g, 40)):
            failures.append(("nf_mul", i))
        if egf_trunc(nf_mul(f, g), 20) != series_mul(egf_trunc(f, 20), egf_trunc(g, 20)):
            failures.append(("egf", i))
    for i in range(50):
        s = random_recurrence(rng, max_order=6)
        order = 3 * s.order + 3
        q = ogf_from_recurrence(s)
        lhs = series_mul(PowerSeriesTrunc.from_poly(q.den, order), ordinary_series(gen_terms(s, order)))
        if lhs != PowerSeriesTrunc.from_poly(q.num, order):
            failures.append(("omega", i))
    assert failures == []


@criterion(6, "moment test agrees with brute force on 100 instances")
def test_oracle_agreement():
    rng = random.Random(6)
    disagreements = []
    for i in range(100):
        # alternate unconstrained elements with ones built inside a power of the ideal
        sample = random_group_element if i % 2 else random_ideal_element
        g = sample(rng, max_support=4)
        h = rng.randint(0, 3)
        if aug_power_member(g, h) != aug_power_member_bruteforce(g, h):
            disagreements.append((i, h, g))
    assert disagreements == []


@criterion(7, "degree laws")
def test_degree_laws():
    rng = random.Random(7)
    failures = []
    for i in range(200):
        f = random_normal_form(rng)
        if not jdeg(f) <= ideg(f):
            failures.append(("jdeg<=ideg", i))
        if ideg(f) != cauchy_jdeg(nf_to_recurrence(f)):
            failures.append(("cauchy", i))
    for i in range(100):
        f, g = random_normal_form(rng), random_normal_form(rng)
        fg = nf_mul(f, g)
        if ideg(fg) != ideg(f) + ideg(g):
            failures.append(("ideg additive", i))
        if not jdeg(fg) >= jdeg(f) + jdeg(g):
            failures.append(("jdeg superadditive", i))
    assert failures == []


@criterion(8, "density of polynomials in xi")
def test_density():
    rng = random.Random(8)
    failures = []
    for i in range(50):
        f = random_normal_form(rng)
        for n in range(11):
            if ideg(f - nf_truncate(f, n)) < n:
                failures.append((i, n))
    assert failures == []


@criterion(9, "zeta escape: BM orders of (1/n!) prefixes strictly increase")
def test_zeta_escape():
    scaled = zeta((1,) * 16)
    orders = [berlekamp_massey(scaled[:m]).order for m in (4, 8, 12, 16)]
    assert all(a < b for a, b in zip(orders, orders[1:])), orders
    assert ZERO not in scaled
