"""Z-bases for finitely generated subgroups of (Q(i), +).

Q(i) is Q^2 as an additive group; after clearing a common denominator the
support becomes a set of integer vectors, and the Hermite normal form of
those vectors is a Z-basis of the subgroup they generate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .scalar import GaussianRational, as_scalar


def hermite_normal_form(rows: list[list[int]]) -> list[list[int]]:
    """Row-style HNF: nonzero rows, positive pivots, reduced above each pivot."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[p] = m[p], m[r]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    if m[i][c]:
                        done = False
            if done:
                break
        if not m[r][c]:
            continue
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
    return [row for row in m[:r]]


@dataclass(frozen=True)
class LatticeBasis:
    """A Z-basis b_1..b_t of the subgroup generated by a finite support.

    ``coords[lam]`` holds the integer coordinates of ``lam``, so that
    lam = sum_i coords[lam][i] * basis[i].
    """

    basis: tuple
    coords: dict = field(hash=False)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def point(self, n) -> GaussianRational:
        out = GaussianRational(0)
        for ni, b in zip(n, self.basis):
            out += ni * b
        return out


def lattice_basis(support) -> LatticeBasis:
    support = sorted({as_scalar(s) for s in support}, key=lambda z: z.sort_key())
    den = 1
    for z in support:
        den = lcm(den, z.re.denominator, z.im.denominator)
    vectors = {z: [int(z.re * den), int(z.im * den)] for z in support}
    hnf = hermite_normal_form(list(vectors.values()))
    basis = tuple(GaussianRational(a, b) / den for a, b in hnf)
    pivots = [next(j for j, a in enumerate(row) if a) for row in hnf]
    coords = {}
    for z, v in vectors.items():
        v = list(v)
        n = []
        for row, p in zip(hnf, pivots):
            q, rem = divmod(v[p], row[p])
            assert rem == 0, "support element outside its own lattice"
            n.append(q)
            v = [a - q * b for a, b in zip(v, row)]
        assert not any(v), "support element outside its own lattice"
        coords[z] = tuple(n)
    return LatticeBasis(basis, coords)
