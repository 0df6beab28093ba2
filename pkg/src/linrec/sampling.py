"""Seeded random elements for property checks."""

from __future__ import annotations

import random

from .filtration import GroupAlgebraElement
from .normal_form import NormalForm
from .scalar import GaussianRational
from .sequences import RecurrenceSequence


def random_scalar(rng: random.Random, bound: int = 3, denominators=(1, 2, 3), complex_prob: float = 0.3):
    re = GaussianRational(rng.randint(-bound, bound)) / rng.choice(denominators)
    if rng.random() < complex_prob:
        return re + GaussianRational(0, rng.randint(-bound, bound)) / rng.choice(denominators)
    return re


def random_nonzero_scalar(rng: random.Random, **kw):
    while True:
        x = random_scalar(rng, **kw)
        if x:
            return x


def random_lambda(rng: random.Random):
    """Eigenvalue drawn from a small pool of Gaussian rationals."""
    return random_scalar(rng, bound=2, denominators=(1, 2), complex_prob=0.3)


def random_normal_form(rng: random.Random, max_support: int = 5, max_k: int = 3, nonzero: bool = True) -> NormalForm:
    while True:
        size = rng.randint(1, max_support)
        items = [((rng.randint(0, max_k), random_lambda(rng)), random_nonzero_scalar(rng)) for _ in range(size)]
        f = NormalForm(items)
        if f or not nonzero:
            return f


def random_recurrence(rng: random.Random, max_order: int = 6) -> RecurrenceSequence:
    r = rng.randint(1, max_order)
    coeffs = [random_scalar(rng, bound=2) for _ in range(r)]
    initial = [random_scalar(rng, bound=3) for _ in range(r)]
    return RecurrenceSequence(coeffs, initial)


def random_group_element(rng: random.Random, max_support: int = 4, rank: int | None = None, coord_bound: int = 2) -> GroupAlgebraElement:
    """Element supported on a random lattice of rank <= 2 with small coordinates."""
    if rank is None:
        rank = rng.choice((1, 2))
    pool = [GaussianRational(1), GaussianRational(1, 1) / 2, GaussianRational(0, 1), GaussianRational(1, 3) / 3]
    basis = rng.sample(pool, rank)
    size = rng.randint(1, max_support)
    terms = {}
    for _ in range(size):
        lam = sum((rng.randint(-coord_bound, coord_bound) * b for b in basis), GaussianRational(0))
        terms[lam] = terms.get(lam, 0) + random_nonzero_scalar(rng, bound=2, denominators=(1, 2))
    return GroupAlgebraElement(terms)


def random_ideal_element(rng: random.Random, max_support: int = 4, rank: int | None = None, max_power: int = 3) -> GroupAlgebraElement:
    """Element built as phi_v * prod (phi_b - eps)^e, optionally plus a difference phi_a - phi_c.

    These land in a known power of the augmentation ideal, so membership
    questions are not decided by the augmentation alone.
    """
    if rank is None:
        rank = rng.choice((1, 2))
    pool = [GaussianRational(1), GaussianRational(1, 1) / 2, GaussianRational(0, 1), GaussianRational(1, 3) / 3]
    while True:
        basis = rng.sample(pool, rank)
        g = GroupAlgebraElement({rng.randint(-1, 1) * rng.choice(basis): random_nonzero_scalar(rng, bound=2, denominators=(1, 2))})
        for _ in range(rng.randint(0, max_power)):
            b = rng.choice(basis) * rng.choice((1, -1, 2))
            g = g * GroupAlgebraElement({b: 1, 0: -1})
        if rng.random() < 0.3:
            a, c = (rng.randint(-2, 2) * rng.choice(basis) for _ in range(2))
            g = g + GroupAlgebraElement({a: 1}) - GroupAlgebraElement({c: 1})
        if g.terms and len(g.terms) <= max_support:
            return g
