"""The two filtration degrees on linearly recursive sequences.

``ideg`` is the order of vanishing of the exponential generating series
(equivalently, the number of leading zero terms).  ``jdeg`` is the adic
degree for the augmentation ideal J of the Hurwitz algebra itself.  With
f = sum_k xi^k g_k split by xi-degree, J^n consists of the f whose slice
g_k lies in the h-th power of the augmentation ideal of the group algebra
for h = n - k, so

    jdeg(f) = min over nonzero slices of (k + order of g_k),

and the order of a group-algebra element is read off from its Taylor data
at the identity (generalized-binomial moments over a lattice basis of its
support).

The witnesses w_n = phi_1 - sum_{k<n} xi^k / k! have ideg n but jdeg 1.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from itertools import product as cartesian
from math import factorial
from typing import Union

from . import linalg
from .errors import BoxTooSmall, VerificationFailure
from .lattice import LatticeBasis, lattice_basis
from .normal_form import NormalForm, nf_eval, nf_to_recurrence
from .scalar import ZERO, GaussianRational, as_scalar, format_scalar, gen_binomial
from .sequences import RecurrenceSequence

__all__ = [
    "INFINITE",
    "DegreeReport",
    "GroupAlgebraElement",
    "aug_order",
    "aug_power_member",
    "aug_power_member_bruteforce",
    "cauchy_jdeg",
    "degree_report",
    "format_witness_table",
    "ideg",
    "jdeg",
    "lattice_basis",
    "witness",
    "witness_table",
]

INFINITE = math.inf
Degree = Union[int, float]


class GroupAlgebraElement:
    """Finite combination sum a_lam phi_lam in the group algebra of (Q(i), +)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = defaultdict(lambda: ZERO)
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for lam, c in items:
            acc[as_scalar(lam)] += as_scalar(c)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def phi(cls, lam, coeff=1):
        return cls({lam: coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def support(self):
        return sorted(self._terms, key=lambda z: z.sort_key())

    def augmentation(self) -> GaussianRational:
        return sum(self._terms.values(), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other):
        acc = dict(self._terms)
        for lam, c in other._terms.items():
            acc[lam] = acc.get(lam, ZERO) + c
        return GroupAlgebraElement(acc)

    def __neg__(self):
        return GroupAlgebraElement({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            acc = defaultdict(lambda: ZERO)
            for lam, a in self._terms.items():
                for mu, b in other._terms.items():
                    acc[lam + mu] += a * b
            return GroupAlgebraElement(acc)
        c = as_scalar(other)
        return GroupAlgebraElement({k: v * c for k, v in self._terms.items()})

    __rmul__ = __mul__

    def as_normal_form(self) -> NormalForm:
        return NormalForm({(0, lam): c for lam, c in self._terms.items()})

    def __repr__(self):
        inner = " + ".join(f"({format_scalar(c)})*phi[{format_scalar(l)}]" for l, c in
                           sorted(self._terms.items(), key=lambda kv: kv[0].sort_key()))
        return f"GroupAlgebraElement({inner or '0'})"


def _as_group_element(g) -> GroupAlgebraElement:
    if isinstance(g, GroupAlgebraElement):
        return g
    if isinstance(g, NormalForm):
        if g.xi_degree() > 0:
            raise ValueError("normal form has xi-degree > 0; not a group-algebra element")
        return GroupAlgebraElement({lam: c for (_, lam), c in g.terms.items()})
    return GroupAlgebraElement(g)


def _multi_indices(t: int, total: int):
    """All d in N^t with |d| == total."""
    if t == 0:
        if total == 0:
            yield ()
        return
    if t == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _multi_indices(t - 1, total - first):
            yield (first,) + rest


def _moment(g: GroupAlgebraElement, lat: LatticeBasis, d) -> GaussianRational:
    acc = ZERO
    for lam, a in g._terms.items():
        w = 1
        for ni, di in zip(lat.coords[lam], d):
            w *= gen_binomial(ni, di)
            if not w:
                break
        if w:
            acc += w * a
    return acc


def _shift_extent(g: GroupAlgebraElement, lat: LatticeBasis):
    """Corner s (componentwise min coordinate) and shifted total degree D."""
    pts = [lat.coords[lam] for lam in g._terms]
    corner = tuple(min(p[i] for p in pts) for i in range(lat.rank))
    span = max(sum(pi - si for pi, si in zip(p, corner)) for p in pts)
    return corner, span


def aug_order(g) -> Degree:
    """Largest h with g in (ker eps)^h; INFINITE for g = 0."""
    g = _as_group_element(g)
    if g.is_zero():
        return INFINITE
    lat = lattice_basis(g._terms)
    _, span = _shift_extent(g, lat)
    # a nonzero polynomial of total degree D vanishes to order at most D
    for order in range(span + 1):
        for d in _multi_indices(lat.rank, order):
            if _moment(g, lat, d):
                return order
    raise VerificationFailure("nonzero element with vanishing Taylor data")


def aug_power_member(g, h: int) -> bool:
    """Decide whether g lies in the h-th power of the augmentation ideal.

    g is in (ker eps)^h exactly when sum_lam a_lam * prod_i C(n_i(lam), d_i)
    vanishes for every multi-index d with |d| < h, where n(lam) are the
    coordinates of lam over a Z-basis of the support's lattice.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    if h == 0:
        return True
    g = _as_group_element(g)
    if g.is_zero():
        return True
    lat = lattice_basis(g._terms)
    for order in range(h):
        for d in _multi_indices(lat.rank, order):
            if _moment(g, lat, d):
                return False
    return True


def minimal_box(g) -> int:
    g = _as_group_element(g)
    if g.is_zero():
        return 0
    return _shift_extent(g, lattice_basis(g._terms))[1]


def aug_power_member_bruteforce(g, h: int, box: int | None = None) -> bool:
    """Membership by explicit linear algebra, independent of the moment test.

    Writes the support over a lattice basis b_1..b_t, shifts it so the
    minimal corner is the origin, and asks whether g is a linear
    combination of phi_v * prod_i (phi_{b_i} - eps)^{e_i} with |e| = h and
    shifted total degree |v| + h <= box.  ``box`` defaults to the smallest
    sound value (the shifted total degree of g); smaller boxes raise
    BoxTooSmall.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    g = _as_group_element(g)
    if g.is_zero():
        return True
    lat = lattice_basis(g._terms)
    t = lat.rank
    corner, span = _shift_extent(g, lat)
    if box is None:
        box = span
    if box < span:
        raise BoxTooSmall(f"box {box} cannot hold an element of shifted degree {span}")
    points = [w for total in range(box + 1) for w in _multi_indices(t, total)]
    index = {w: i for i, w in enumerate(points)}
    target = [ZERO] * len(points)
    for lam, a in g._terms.items():
        w = tuple(ni - si for ni, si in zip(lat.coords[lam], corner))
        target[index[w]] += a
    columns = []
    if box >= h:
        for e in _multi_indices(t, h):
            # expand prod (t_i - 1)^{e_i}
            expansion = {}
            for f in cartesian(*(range(ei + 1) for ei in e)):
                c = 1
                for ei, fi in zip(e, f):
                    c *= math.comb(ei, fi) * (-1) ** (ei - fi)
                expansion[f] = c
            for vtot in range(box - h + 1):
                for v in _multi_indices(t, vtot):
                    col = [0] * len(points)
                    for f, c in expansion.items():
                        col[index[tuple(vi + fi for vi, fi in zip(v, f))]] += c
                    columns.append([GaussianRational(c) for c in col])
    return linalg.in_column_span(columns, target)


def ideg(f: NormalForm) -> Degree:
    """Least m with f(e_m) != 0; INFINITE for f = 0.

    A nonzero f satisfies a recurrence of order D = sum_lam (K_lam + 1), so
    one of its first D terms is nonzero.
    """
    bound = sum(top + 1 for top in f.roots().values())
    for m in range(bound):
        if nf_eval(f, m):
            return m
    if not f.is_zero():
        raise VerificationFailure("nonzero normal form with D vanishing terms")
    return INFINITE


def jdeg(f: NormalForm) -> Degree:
    """J-adic degree: min over nonzero xi-slices g_k of k + aug_order(g_k)."""
    if f.is_zero():
        return INFINITE
    return min(k + aug_order(GroupAlgebraElement(g)) for k, g in f.slices().items())


def cauchy_jdeg(s: RecurrenceSequence) -> Degree:
    """Number of leading zero terms (valuation of the ordinary generating function).

    The first r terms determine the sequence, so the scan stops there.
    """
    for n, z in enumerate(s.initial):
        if z:
            return n
    return INFINITE


def witness(n: int) -> NormalForm:
    """phi_1 - sum_{k<n} xi^k / k!."""
    if n < 1:
        raise ValueError("n must be at least 1")
    terms = {(0, 1): 1}
    for k in range(n):
        key = (k, 0)
        terms[key] = terms.get(key, 0) - GaussianRational(1) / factorial(k)
    return NormalForm(terms.items())


@dataclass(frozen=True)
class DegreeReport:
    description: str
    ideg: Degree
    jdeg: Degree
    cauchy_jdeg: Degree | None = None

    def __post_init__(self):
        finite = [d for d in (self.ideg, self.jdeg) if d != INFINITE]
        if len(finite) == 2 and self.jdeg > self.ideg:
            raise VerificationFailure(f"jdeg {self.jdeg} exceeds ideg {self.ideg}")
        if (self.ideg == INFINITE) != (self.jdeg == INFINITE):
            raise VerificationFailure("only the zero element has infinite degree")

    def as_dict(self) -> dict:
        out = {
            "element": self.description,
            "ideg": degree_json(self.ideg),
            "jdeg": degree_json(self.jdeg),
        }
        if self.cauchy_jdeg is not None:
            out["cauchy_jdeg"] = degree_json(self.cauchy_jdeg)
        return out


def degree_json(d: Degree):
    return "inf" if d == INFINITE else int(d)


def degree_report(f: NormalForm, description: str | None = None) -> DegreeReport:
    cj = INFINITE if f.is_zero() else cauchy_jdeg(nf_to_recurrence(f))
    return DegreeReport(description or str(f), ideg(f), jdeg(f), cj)


def witness_table(max_n: int) -> list[DegreeReport]:
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    return [degree_report(witness(n), f"w_{n}") for n in range(1, max_n + 1)]


def witness_rows_json(rows: list[DegreeReport]) -> list[dict]:
    return [
        {"n": n, "ideg": degree_json(r.ideg), "jdeg": degree_json(r.jdeg)}
        for n, r in enumerate(rows, start=1)
    ]


def format_witness_table(rows: list[DegreeReport]) -> str:
    header = f"{'n':>4}  {'ideg':>6}  {'jdeg':>6}"
    lines = [header, "-" * len(header)]
    for n, r in enumerate(rows, start=1):
        lines.append(f"{n:>4}  {degree_json(r.ideg):>6}  {degree_json(r.jdeg):>6}")
    return "\n".join(lines)
