"""Generating-function views of a sequence.

* :class:`RationalOGF` -- the ordinary generating function p(Z)/q(Z),
  kept with gcd(p, q) = 1 and q(0) = 1.
* :class:`PowerSeriesTrunc` -- a power series known modulo Z^(M+1).  The
  exponential image of a normal form has coefficient f(X^k)/k! at Z^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import OrderMismatch, VerificationFailure
from .normal_form import NormalForm, nf_eval
from .polynomial import degree, pdivmod, pgcd, pmul, poly, psub, pscale
from .scalar import ONE, ZERO, GaussianRational, as_scalar
from .sequences import RecurrenceSequence, gen_terms

__all__ = [
    "PowerSeriesTrunc",
    "RationalOGF",
    "egf_trunc",
    "h_series",
    "ogf_from_recurrence",
    "recurrence_from_ogf",
    "series_mul",
    "valuation",
]


@dataclass(frozen=True)
class PowerSeriesTrunc:
    """Coefficients a_0..a_M of a series known modulo Z^(M+1)."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(as_scalar(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a truncated series carries at least a_0")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_poly(cls, p, order: int) -> PowerSeriesTrunc:
        p = tuple(as_scalar(c) for c in p)
        return cls(tuple(p[k] if k < len(p) else ZERO for k in range(order + 1)))

    @classmethod
    def monomial(cls, n: int, order: int) -> PowerSeriesTrunc:
        return cls(tuple(ONE if k == n else ZERO for k in range(order + 1)))

    def __getitem__(self, k):
        return self.coeffs[k]

    def _check(self, other):
        if not isinstance(other, PowerSeriesTrunc):
            raise TypeError("expected a PowerSeriesTrunc")
        if other.order != self.order:
            raise OrderMismatch(f"series orders differ ({self.order} vs {other.order})")

    def __add__(self, other):
        self._check(other)
        return PowerSeriesTrunc(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return PowerSeriesTrunc(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return PowerSeriesTrunc(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        return series_mul(self, other)


def series_mul(a: PowerSeriesTrunc, b: PowerSeriesTrunc) -> PowerSeriesTrunc:
    """Cauchy product modulo Z^(M+1); orders must match."""
    a._check(b)
    m = a.order
    out = [ZERO] * (m + 1)
    for i, x in enumerate(a.coeffs):
        if x.is_zero():
            continue
        for j in range(m + 1 - i):
            y = b.coeffs[j]
            if y:
                out[i + j] += x * y
    return PowerSeriesTrunc(tuple(out))


def valuation(a: PowerSeriesTrunc) -> int | None:
    """Index of the first nonzero coefficient, or None when all stored vanish."""
    for k, c in enumerate(a.coeffs):
        if c:
            return k
    return None


def egf_trunc(f: NormalForm, order: int) -> PowerSeriesTrunc:
    """Exponential image of ``f``: coefficient f(X^k)/k! at Z^k, k <= order."""
    return PowerSeriesTrunc(tuple(nf_eval(f, k) / factorial(k) for k in range(order + 1)))


def h_series(k: int, order: int) -> PowerSeriesTrunc:
    """The series sum_n Z^n / (n+k)!, truncated at ``order``."""
    return PowerSeriesTrunc(
        tuple(GaussianRational(1) / factorial(n + k) for n in range(order + 1))
    )


def ordinary_series(terms) -> PowerSeriesTrunc:
    """The series sum z_n Z^n of a finite prefix."""
    return PowerSeriesTrunc(tuple(terms))


@dataclass(frozen=True)
class RationalOGF:
    """p(Z)/q(Z) with q(0) = 1 and gcd(p, q) = 1.

    Construction canonicalizes; coefficient tuples are ascending.
    """

    num: tuple
    den: tuple

    def __post_init__(self):
        p, q = poly(self.num), poly(self.den)
        if not q or q[0].is_zero():
            raise ValueError("denominator must have a nonzero constant term")
        if not p:
            q = (ONE,)
        else:
            g = pgcd(p, q)
            if len(g) > 1:
                p = pdivmod(p, g)[0]
                q = pdivmod(q, g)[0]
        scale = ONE / q[0]
        object.__setattr__(self, "num", pscale(p, scale))
        object.__setattr__(self, "den", pscale(q, scale))

    def expand(self, order: int) -> PowerSeriesTrunc:
        """Coefficients of p/q up to Z^order."""
        p, q = self.num, self.den
        out = []
        for n in range(order + 1):
            acc = p[n] if n < len(p) else ZERO
            for i in range(1, min(n, len(q) - 1) + 1):
                acc -= q[i] * out[n - i]
            out.append(acc)  # q[0] == 1
        return PowerSeriesTrunc(tuple(out))


def ogf_from_recurrence(s: RecurrenceSequence) -> RationalOGF:
    """p/q with q(Z) * sum z_n Z^n = p(Z).

    In the monic form a_{l+r} + m_{r-1} a_{l+r-1} + ... + m_0 a_l = 0 (so
    m_i are the ascending characteristic-polynomial coefficients), we take
    q(Z) = sum_i m_{r-i} Z^i and p(Z) = sum_{j<r} (sum_{i<=j} m_{r-i} a_{j-i}) Z^j.
    """
    r = s.order
    if r == 0:
        return RationalOGF((), (ONE,))
    m = s.characteristic_polynomial()
    a = s.initial
    q = tuple(m[r - i] for i in range(r + 1))
    p = tuple(sum((m[r - i] * a[j - i] for i in range(j + 1)), ZERO) for j in range(r))
    check = 3 * r + 3
    series = pmul(q, gen_terms(s, check - 1))
    if any(c for c in psub(series[:check], p)):
        raise VerificationFailure("q * S - p does not vanish")
    return RationalOGF(p, q)


def recurrence_from_ogf(g: RationalOGF) -> RecurrenceSequence:
    """Minimal recurrence of the expansion of ``g``.

    With q = 1 + q_1 Z + ... + q_d Z^d, the terms obey
    z_n = -q_1 z_{n-1} - ... - q_d z_{n-d} once n > deg p, so the order is
    max(d, deg p + 1).
    """
    if not g.num:
        return RecurrenceSequence.zero()
    d = degree(g.den)
    r = max(d, degree(g.num) + 1)
    coeffs = tuple(-(g.den[j] if j <= d else ZERO) for j in range(1, r + 1))
    initial = g.expand(r - 1).coeffs
    return RecurrenceSequence(coeffs, initial)
