"""Dense univariate polynomials over Q(i).

A polynomial is a tuple of coefficients in ascending degree order with no
trailing zeros; the zero polynomial is ``()``.  Root finding is exact:
candidates come from Gaussian-integer divisors of the constant and
leading coefficients after clearing denominators.
"""

from __future__ import annotations

from itertools import product as cartesian
from math import gcd, isqrt, lcm

from sympy import divisors

from .scalar import ONE, ZERO, GaussianRational, as_scalar

Poly = tuple  # tuple[GaussianRational, ...]


def poly(coeffs) -> Poly:
    out = [as_scalar(c) for c in coeffs]
    while out and out[-1].is_zero():
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(p) - 1


def padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO) for i in range(n))


def pneg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def psub(p: Poly, q: Poly) -> Poly:
    return padd(p, pneg(q))


def pscale(p: Poly, c) -> Poly:
    c = as_scalar(c)
    return poly(a * c for a in p)


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def pdivmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [ZERO] * max(len(p) - dq, 0)
    for i in range(len(p) - 1, dq - 1, -1):
        c = rem[i] / lead
        if c.is_zero():
            continue
        quot[i - dq] = c
        for j in range(dq + 1):
            rem[i - dq + j] -= c * q[j]
    return poly(quot), poly(rem[:dq])


def monic(p: Poly) -> Poly:
    if not p:
        return p
    return pscale(p, ONE / p[-1])


def pgcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (``()`` if both are zero)."""
    while q:
        p, q = q, pdivmod(p, q)[1]
    return monic(p)


def peval(p: Poly, x) -> GaussianRational:
    x = as_scalar(x)
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def from_roots(roots) -> Poly:
    """Monic product of (x - r) over ``roots`` (with repetition)."""
    out: Poly = (ONE,)
    for r in roots:
        out = pmul(out, (-as_scalar(r), ONE))
    return out


def format_poly(p: Poly, var: str = "Z") -> str:
    from .scalar import format_scalar

    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if c.is_zero():
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        text = format_scalar(c)
        if mono:
            if c == ONE:
                text = mono
            elif c == -ONE:
                text = "-" + mono
            elif c.re and c.im:
                text = f"({text})*{mono}"
            else:
                text = f"{text}*{mono}"
        parts.append(text)
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# Gaussian integers as (a, b) pairs of ints


def _gi_mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gi_divides(d, z) -> bool:
    n = d[0] * d[0] + d[1] * d[1]
    # z / d = z * conj(d) / N(d)
    re = z[0] * d[0] + z[1] * d[1]
    im = z[1] * d[0] - z[0] * d[1]
    return re % n == 0 and im % n == 0


def _sum_of_two_squares(n: int):
    """All (a, b) with a^2 + b^2 = n."""
    out = []
    a = 0
    while a * a <= n:
        b2 = n - a * a
        b = isqrt(b2)
        if b * b == b2:
            for sa, sb in cartesian((1, -1), (1, -1)):
                out.append((sa * a, sb * b))
        a += 1
    return set(out)


def gaussian_divisors(z: tuple[int, int]) -> list[tuple[int, int]]:
    """Every Gaussian-integer divisor of the nonzero Gaussian integer z."""
    n = z[0] * z[0] + z[1] * z[1]
    if n == 0:
        raise ValueError("zero has no finite divisor set")
    out = set()
    for m in divisors(n):
        for d in _sum_of_two_squares(m):
            if _gi_divides(d, z):
                out.add(d)
    return sorted(out)


def _associate_classes(divs):
    """One representative per associate class (unit multiples)."""
    units = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    seen = set()
    reps = []
    for d in divs:
        if d in seen:
            continue
        reps.append(d)
        for u in units:
            seen.add(_gi_mul(d, u))
    return reps


def _to_gaussian_integers(p: Poly) -> list[tuple[int, int]]:
    den = 1
    for c in p:
        den = lcm(den, c.re.denominator, c.im.denominator)
    ints = [(int(c.re * den), int(c.im * den)) for c in p]
    g = 0
    for a, b in ints:
        g = gcd(g, a, b)
    return [(a // g, b // g) for a, b in ints]


def _find_root(p: Poly) -> GaussianRational | None:
    ints = _to_gaussian_integers(p)
    const, lead = ints[0], ints[-1]
    nums = gaussian_divisors(const)
    dens = _associate_classes(gaussian_divisors(lead))
    tried = set()
    for q in dens:
        qq = GaussianRational(*q)
        for num in nums:
            cand = GaussianRational(*num) / qq
            if cand in tried:
                continue
            tried.add(cand)
            if peval(p, cand).is_zero():
                return cand
    return None


def roots_over_gaussian_rationals(p: Poly) -> tuple[dict[GaussianRational, int], Poly]:
    """Factor ``p`` as (product of linear factors) * residual.

    Returns ``(roots, residual)`` where ``roots`` maps each root in Q(i) to
    its multiplicity and ``residual`` is monic with no roots in Q(i)
    (``(1,)`` when ``p`` splits completely).
    """
    p = monic(poly(p))
    if not p:
        raise ValueError("the zero polynomial has no finite root multiset")
    roots: dict[GaussianRational, int] = {}
    while len(p) > 1 and p[0].is_zero():
        roots[ZERO] = roots.get(ZERO, 0) + 1
        p = p[1:]
    while len(p) > 1:
        r = _find_root(p)
        if r is None:
            break
        lin = (-r, ONE)
        while len(p) > 1:
            quot, rem = pdivmod(p, lin)
            if rem:
                break
            roots[r] = roots.get(r, 0) + 1
            p = quot
    return roots, p
