"""Linearly recursive sequences as polynomials in xi over the group algebra.

Every linearly recursive sequence (split over Q(i)) is a unique finite sum

    f = sum a_{k,lam} xi^k phi_lam,

where ``phi_lam`` is the geometric sequence lam^n and ``xi`` is the sequence
(0, 1, 0, 0, ...).  Products are Hurwitz products, under which

    (xi^k phi_lam)(xi^l phi_mu) = xi^(k+l) phi_(lam+mu),
    (xi^k phi_lam)(X^n)         = n!/(n-k)! * lam^(n-k).

A basis key is a pair ``(k, lam)``; ``epsilon = phi_0`` is the key (0, 0).
"""

from __future__ import annotations

from collections import defaultdict
from math import comb, factorial

from . import linalg
from .errors import NonSplitCharPoly, VerificationFailure, ZeroElement
from .polynomial import format_poly, from_roots, roots_over_gaussian_rationals
from .scalar import ONE, ZERO, GaussianRational, as_scalar, format_scalar
from .sequences import RecurrenceSequence, gen_terms

__all__ = [
    "NormalForm",
    "TensorSum",
    "basis_eval",
    "nf_antipode",
    "nf_comul",
    "nf_counit",
    "nf_eval",
    "nf_from_recurrence",
    "nf_mul",
    "nf_to_recurrence",
    "nf_truncate",
]


def _key(k, lam):
    k = int(k)
    if k < 0:
        raise ValueError("xi exponent must be non-negative")
    return (k, as_scalar(lam))


def key_sort(key):
    k, lam = key
    return (k, lam.re, lam.im)


class NormalForm:
    """Finite-support linear combination of the basis ``xi^k phi_lam``."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = defaultdict(lambda: ZERO)
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for key, coeff in items:
            acc[_key(*key)] += as_scalar(coeff)
        self._terms = {k: v for k, v in acc.items() if not v.is_zero()}

    @classmethod
    def _raw(cls, terms):
        out = object.__new__(cls)
        out._terms = {k: v for k, v in terms.items() if not v.is_zero()}
        return out

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def basis(cls, k=0, lam=0, coeff=1):
        return cls({(k, lam): coeff})

    @classmethod
    def phi(cls, lam):
        return cls.basis(0, lam)

    @classmethod
    def xi(cls, k=1):
        return cls.basis(k, 0)

    @classmethod
    def epsilon(cls):
        return cls.basis(0, 0)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """(key, coeff) pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: key_sort(kv[0]))

    def support(self):
        return [k for k, _ in self.items()]

    def coefficient(self, k, lam) -> GaussianRational:
        return self._terms.get(_key(k, lam), ZERO)

    def roots(self) -> dict:
        """Map lam -> K_lam, the largest xi exponent present at lam."""
        out = {}
        for k, lam in self._terms:
            out[lam] = max(out.get(lam, -1), k)
        return out

    def xi_degree(self) -> int:
        return max((k for k, _ in self._terms), default=-1)

    def slices(self) -> dict:
        """Group-algebra slices g_k with f = sum_k xi^k g_k, as {k: {lam: a}}."""
        out = defaultdict(dict)
        for (k, lam), c in self._terms.items():
            out[k][lam] = c
        return dict(out)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        acc = dict(self._terms)
        for key, c in other._terms.items():
            acc[key] = acc.get(key, ZERO) + c
        return NormalForm._raw(acc)

    def __neg__(self):
        return NormalForm._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NormalForm):
            return nf_mul(self, other)
        c = as_scalar(other)
        return NormalForm._raw({k: v * c for k, v in self._terms.items()})

    def __rmul__(self, other):
        return self * other

    def __repr__(self):
        return f"NormalForm({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (k, lam), c in self.items():
            mono = []
            if k:
                mono.append("xi" if k == 1 else f"xi^{k}")
            if k == 0 or not lam.is_zero():
                mono.append(f"phi[{format_scalar(lam)}]")
            coeff = format_scalar(c)
            if c.re and c.im:
                coeff = f"({coeff})"
            parts.append(("" if c == ONE else coeff + "*") + "*".join(mono))
        return " + ".join(parts)


def basis_eval(k: int, lam: GaussianRational, n: int) -> GaussianRational:
    """Value of xi^k phi_lam on X^n, with 0^0 = 1."""
    if n < k:
        return ZERO
    falling = factorial(n) // factorial(n - k)
    if n == k:
        return GaussianRational(falling)
    return falling * lam ** (n - k)


def nf_eval(f: NormalForm, n: int) -> GaussianRational:
    """The n-th term of the sequence ``f``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    acc = ZERO
    for (k, lam), c in f._terms.items():
        if k <= n:
            acc += c * basis_eval(k, lam, n)
    return acc


def nf_values(f: NormalForm, count: int) -> tuple:
    """First ``count`` terms of ``f``."""
    return tuple(nf_eval(f, n) for n in range(count))


def nf_mul(f: NormalForm, g: NormalForm) -> NormalForm:
    acc = defaultdict(lambda: ZERO)
    for (k, lam), a in f._terms.items():
        for (l, mu), b in g._terms.items():
            acc[(k + l, lam + mu)] += a * b
    return NormalForm._raw(acc)


def nf_counit(f: NormalForm) -> GaussianRational:
    """Augmentation: the 0-th term, i.e. the sum of xi-free coefficients."""
    acc = ZERO
    for (k, _), c in f._terms.items():
        if k == 0:
            acc += c
    return acc


def nf_antipode(f: NormalForm) -> NormalForm:
    return NormalForm._raw(
        {(k, -lam): (-c if k % 2 else c) for (k, lam), c in f._terms.items()}
    )


class TensorSum:
    """Finite formal sum of ``left (x) right`` over pairs of basis keys."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = defaultdict(lambda: ZERO)
        for (left, right), c in (terms.items() if isinstance(terms, dict) else terms or ()):
            acc[(_key(*left), _key(*right))] += as_scalar(c)
        self._terms = {k: v for k, v in acc.items() if not v.is_zero()}

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(
            self._terms.items(), key=lambda kv: (key_sort(kv[0][0]), key_sort(kv[0][1]))
        )

    def __eq__(self, other):
        if not isinstance(other, TensorSum):
            return NotImplemented
        return self._terms == other._terms

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        return f"TensorSum({len(self._terms)} terms)"

    def map_left(self, func) -> TensorSum:
        """Apply a linear map NormalForm -> NormalForm to every left factor."""
        acc = defaultdict(lambda: ZERO)
        for (left, right), c in self._terms.items():
            for key, d in func(NormalForm.basis(*left))._terms.items():
                acc[(key, right)] += c * d
        return TensorSum(acc)

    def multiply(self) -> NormalForm:
        """Collapse left (x) right to the product left * right."""
        acc = NormalForm.zero()
        for ((k, lam), (l, mu)), c in self._terms.items():
            acc = acc + NormalForm.basis(k + l, lam + mu, c)
        return acc


def nf_comul(f: NormalForm) -> TensorSum:
    """Delta(xi^k phi_lam) = sum_j C(k,j) xi^j phi_lam (x) xi^(k-j) phi_lam."""
    acc = defaultdict(lambda: ZERO)
    for (k, lam), c in f._terms.items():
        for j in range(k + 1):
            acc[((j, lam), (k - j, lam))] += comb(k, j) * c
    return TensorSum(acc)


def nf_truncate(f: NormalForm, n: int) -> NormalForm:
    """The polynomial sum_{k<n} f(e_k) xi^k, where f(e_k) = f(X^k)/k!."""
    return NormalForm._raw(
        {(k, ZERO): nf_eval(f, k) / factorial(k) for k in range(n)}
    )


def nf_from_recurrence(s: RecurrenceSequence) -> NormalForm:
    """Exact normal form of a recurrence whose characteristic polynomial splits.

    Raises :class:`NonSplitCharPoly` when some root lies outside Q(i).
    """
    r = s.order
    if r == 0:
        return NormalForm.zero()
    roots, residual = roots_over_gaussian_rationals(s.characteristic_polynomial())
    if len(residual) > 1:
        raise NonSplitCharPoly(
            "characteristic polynomial does not split over Q(i); "
            f"factor without roots in Q(i): {format_poly(residual, 'x')}",
            residual=residual,
            roots=roots,
        )
    keys = [
        (k, lam)
        for lam, mult in sorted(roots.items(), key=lambda kv: kv[0].sort_key())
        for k in range(mult)
    ]
    # confluent Vandermonde system: sum_keys a_key * basis(key)(X^n) = z_n, n < r
    matrix = [[basis_eval(k, lam, n) for k, lam in keys] for n in range(r)]
    try:
        coeffs = linalg.solve(matrix, list(s.initial))
    except ValueError as exc:
        raise VerificationFailure("confluent Vandermonde system is singular") from exc
    f = NormalForm._raw(dict(zip(keys, coeffs)))
    check = 2 * r + 4
    if nf_values(f, check) != gen_terms(s, check - 1):
        raise VerificationFailure("normal form does not regenerate the recurrence")
    return f


def nf_to_recurrence(f: NormalForm) -> RecurrenceSequence:
    """Minimal recurrence with characteristic polynomial prod (x-lam)^(K_lam+1)."""
    if f.is_zero():
        raise ZeroElement("the zero element has no characteristic polynomial")
    root_list = []
    for lam, top in sorted(f.roots().items(), key=lambda kv: kv[0].sort_key()):
        root_list.extend([lam] * (top + 1))
    char = from_roots(root_list)
    r = len(char) - 1
    coeffs = tuple(-char[r - j] for j in range(1, r + 1))
    initial = nf_values(f, r)
    return RecurrenceSequence(coeffs, initial)
