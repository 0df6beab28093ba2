"""Exact verification of the Hopf axioms on individual elements.

Each check returns True/False; :func:`check_all` bundles them.  Used by the
``hopf-check`` subcommand and by the test suite.
"""

from __future__ import annotations

from collections import defaultdict

from .normal_form import NormalForm, TensorSum, basis_eval, nf_antipode, nf_comul, nf_counit, nf_eval
from .scalar import ZERO


def _triple_left(t: TensorSum):
    """(Delta (x) id) applied to a TensorSum."""
    acc = defaultdict(lambda: ZERO)
    for (left, right), c in t.terms.items():
        for (a, b), d in nf_comul(NormalForm.basis(*left)).terms.items():
            acc[(a, b, right)] += c * d
    return {k: v for k, v in acc.items() if v}


def _triple_right(t: TensorSum):
    """(id (x) Delta) applied to a TensorSum."""
    acc = defaultdict(lambda: ZERO)
    for (left, right), c in t.terms.items():
        for (a, b), d in nf_comul(NormalForm.basis(*right)).terms.items():
            acc[(left, a, b)] += c * d
    return {k: v for k, v in acc.items() if v}


def check_coassociativity(f: NormalForm) -> bool:
    delta = nf_comul(f)
    return _triple_left(delta) == _triple_right(delta)


def check_counit(f: NormalForm) -> bool:
    """(eps (x) id) Delta f == f == (id (x) eps) Delta f."""
    left = NormalForm.zero()
    right = NormalForm.zero()
    for (a, b), c in nf_comul(f).terms.items():
        left = left + NormalForm.basis(*b, coeff=c * nf_counit(NormalForm.basis(*a)))
        right = right + NormalForm.basis(*a, coeff=c * nf_counit(NormalForm.basis(*b)))
    return left == f and right == f


def check_antipode(f: NormalForm) -> bool:
    """m (S (x) id) Delta f == eps(f) 1 == m (id (x) S) Delta f."""
    unit = NormalForm.epsilon() * nf_counit(f)
    delta = nf_comul(f)
    lhs = delta.map_left(nf_antipode).multiply()
    swapped = TensorSum({(b, a): c for (a, b), c in delta.terms.items()})
    rhs = swapped.map_left(nf_antipode).multiply()
    return lhs == unit and rhs == unit


def check_defining_property(f: NormalForm, bound: int = 12) -> bool:
    """f(X^(a+b)) == sum c * left(X^a) * right(X^b) for all a + b <= bound."""
    delta = nf_comul(f).terms
    for a in range(bound + 1):
        for b in range(bound + 1 - a):
            rhs = ZERO
            for (left, right), c in delta.items():
                rhs += c * basis_eval(*left, a) * basis_eval(*right, b)
            if rhs != nf_eval(f, a + b):
                return False
    return True


CHECKS = {
    "coassociativity": check_coassociativity,
    "counit": check_counit,
    "antipode": check_antipode,
    "defining_property": check_defining_property,
}


def check_all(f: NormalForm) -> dict[str, bool]:
    return {name: check(f) for name, check in CHECKS.items()}
