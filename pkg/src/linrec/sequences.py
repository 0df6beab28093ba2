"""Linearly recursive sequences in recurrence form.

A :class:`RecurrenceSequence` of order r stores coefficients c_1..c_r and
initial terms z_0..z_{r-1}, with

    z_n = c_1 z_{n-1} + ... + c_r z_{n-r}    for n >= r.

Order 0 is the zero sequence.  Finite prefixes ("term vectors") are plain
tuples of :class:`~linrec.scalar.GaussianRational`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .errors import LengthMismatch, VerificationFailure
from .scalar import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "RecurrenceSequence",
    "berlekamp_massey",
    "cauchy_product",
    "gen_terms",
    "hurwitz_product",
    "product_recurrence",
    "zeta",
]


@dataclass(frozen=True)
class RecurrenceSequence:
    coeffs: tuple
    initial: tuple

    def __post_init__(self):
        coeffs = tuple(as_scalar(c) for c in self.coeffs)
        initial = tuple(as_scalar(z) for z in self.initial)
        if len(coeffs) != len(initial):
            raise ValueError(
                f"recurrence needs as many initial terms as coefficients "
                f"({len(coeffs)} coefficients, {len(initial)} initial terms)"
            )
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "initial", initial)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls) -> RecurrenceSequence:
        return cls((), ())

    def is_zero(self) -> bool:
        return all(z.is_zero() for z in self.initial)

    def terms(self, count: int) -> tuple:
        """The first ``count`` terms."""
        if count <= 0:
            return ()
        return gen_terms(self, count - 1)

    def characteristic_polynomial(self) -> tuple:
        """x^r - c_1 x^(r-1) - ... - c_r, ascending coefficients."""
        return tuple(-c for c in reversed(self.coeffs)) + (ONE,)

    def __str__(self):
        from .scalar import format_scalar

        if not self.order:
            return "zero sequence"
        rhs = " + ".join(
            f"({format_scalar(c)})*z[n-{j}]" for j, c in enumerate(self.coeffs, start=1)
        )
        init = ", ".join(format_scalar(z) for z in self.initial)
        return f"z[n] = {rhs}; initial ({init})"


def gen_terms(s: RecurrenceSequence, m: int) -> tuple:
    """Terms z_0..z_m."""
    if m < 0:
        raise ValueError("m must be non-negative")
    r = s.order
    if r == 0:
        return (ZERO,) * (m + 1)
    out = list(s.initial[: m + 1])
    for n in range(r, m + 1):
        acc = ZERO
        for j, c in enumerate(s.coeffs, start=1):
            if not c.is_zero():
                acc += c * out[n - j]
        out.append(acc)
    return tuple(out)


def _check_lengths(x, y):
    if len(x) != len(y):
        raise LengthMismatch(f"term vectors differ in length ({len(x)} vs {len(y)})")


def hurwitz_product(x, y) -> tuple:
    """Binomial convolution: n-th term sum_k C(n,k) x_k y_{n-k}."""
    _check_lengths(x, y)
    x = [as_scalar(a) for a in x]
    y = [as_scalar(b) for b in y]
    out = []
    for n in range(len(x)):
        acc = ZERO
        for k in range(n + 1):
            if x[k] and y[n - k]:
                acc += comb(n, k) * x[k] * y[n - k]
        out.append(acc)
    return tuple(out)


def cauchy_product(x, y) -> tuple:
    """Ordinary convolution of two prefixes."""
    _check_lengths(x, y)
    x = [as_scalar(a) for a in x]
    y = [as_scalar(b) for b in y]
    out = []
    for n in range(len(x)):
        acc = ZERO
        for k in range(n + 1):
            if x[k] and y[n - k]:
                acc += x[k] * y[n - k]
        out.append(acc)
    return tuple(out)


def zeta(x, direction: str = "forward") -> tuple:
    """Divide (``forward``) or multiply (``inverse``) term n by n!."""
    if direction == "forward":
        return tuple(as_scalar(z) / factorial(n) for n, z in enumerate(x))
    if direction == "inverse":
        return tuple(as_scalar(z) * factorial(n) for n, z in enumerate(x))
    raise ValueError(f"direction must be 'forward' or 'inverse', not {direction!r}")


def berlekamp_massey(x) -> RecurrenceSequence:
    """Shortest recurrence regenerating the prefix ``x``.

    Classical LFSR synthesis over the field Q(i).  With at least 2d terms
    of a sequence whose minimal order is d, the true recurrence is found.
    """
    s = [as_scalar(z) for z in x]
    conn = [ONE]  # C(x) = 1 + C_1 x + ... ; s_n + sum C_j s_{n-j} = 0
    prev = [ONE]
    length = 0
    shift = 1
    last_disc = ONE
    for n, sn in enumerate(s):
        disc = sn
        for j in range(1, length + 1):
            if j < len(conn) and conn[j]:
                disc += conn[j] * s[n - j]
        if disc.is_zero():
            shift += 1
            continue
        factor = disc / last_disc
        updated = conn + [ZERO] * max(0, len(prev) + shift - len(conn))
        for j, b in enumerate(prev):
            updated[j + shift] -= factor * b
        if 2 * length <= n:
            prev, conn = conn, updated
            length = n + 1 - length
            last_disc = disc
            shift = 1
        else:
            conn = updated
            shift += 1
    conn = conn + [ZERO] * max(0, length + 1 - len(conn))
    coeffs = tuple(-conn[j] for j in range(1, length + 1))
    initial = tuple(s[:length])
    return RecurrenceSequence(coeffs, initial)


def product_recurrence(x: RecurrenceSequence, y: RecurrenceSequence, mode: str = "hurwitz") -> RecurrenceSequence:
    """A recurrence for the Hurwitz or Cauchy product of two sequences.

    The product has order at most r_x * r_y (Hurwitz) or r_x + r_y (Cauchy),
    so Berlekamp-Massey on 2B terms recovers it; the answer is then checked
    against 3B terms.
    """
    if mode == "hurwitz":
        bound = x.order * y.order
        mul = hurwitz_product
    elif mode == "cauchy":
        bound = x.order + y.order
        mul = cauchy_product
    else:
        raise ValueError(f"mode must be 'hurwitz' or 'cauchy', not {mode!r}")
    if bound == 0 or x.is_zero() or y.is_zero():
        return RecurrenceSequence.zero()
    n_check = 3 * bound
    prod = mul(gen_terms(x, n_check - 1), gen_terms(y, n_check - 1))
    rec = berlekamp_massey(prod[: 2 * bound])
    if rec.order == 0:
        if any(prod):
            raise VerificationFailure("zero recurrence for a nonzero product")
        return rec
    if gen_terms(rec, n_check - 1) != prod:
        raise VerificationFailure(f"{mode} product recurrence fails on {n_check} terms")
    return rec
