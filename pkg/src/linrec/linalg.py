"""Fraction-free (Bareiss) Gaussian elimination over Q(i).

Rows are first scaled to Gaussian-integer entries; every intermediate entry
is then a minor of the scaled matrix, so the Bareiss division is exact in
Z[i] and no fractions are formed until back-substitution.
"""

from __future__ import annotations

from math import lcm

from .scalar import ZERO, GaussianRational, as_scalar


def _integral_row(row):
    den = 1
    for c in row:
        den = lcm(den, c.re.denominator, c.im.denominator)
    return [c * den for c in row]


def _exact_div(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    q = a / b
    assert q.re.denominator == 1 and q.im.denominator == 1, "inexact Bareiss division"
    return q


def echelon(rows):
    """Fraction-free row echelon form.

    Returns ``(matrix, pivots)`` where ``pivots`` lists the pivot column of
    each of the first ``len(pivots)`` rows.
    """
    m = [_integral_row([as_scalar(c) for c in row]) for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    prev = GaussianRational(1)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            lead = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = _exact_div(piv * row_i[j] - lead * row_r[j], prev)
            row_i[c] = ZERO
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows) -> int:
    return len(echelon(rows)[1])


def echelon_int(rows):
    """Integer-only Bareiss echelon form; same contract as :func:`echelon`."""
    m = [list(row) for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    prev = 1
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        row_r = m[r]
        for i in range(r + 1, len(m)):
            row_i = m[i]
            lead = row_i[c]
            for j in range(c + 1, ncols):
                num = piv * row_i[j] - lead * row_r[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "inexact Bareiss division"
                row_i[j] = q
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def _rational_int_column(values):
    """Scale a column of real rationals to integers, or None if not all real."""
    den = 1
    for v in values:
        if v.im:
            return None
        den = lcm(den, v.re.denominator)
    return [int(v.re * den) for v in values]


def in_column_span(columns, target) -> bool:
    """True when ``target`` is a Q(i)-combination of ``columns``."""
    target = [as_scalar(t) for t in target]
    if not columns:
        return all(t.is_zero() for t in target)
    columns = [[as_scalar(a) for a in col] for col in columns]
    int_cols = [_rational_int_column(col) for col in columns]
    if all(col is not None for col in int_cols):
        # real matrix: test real and imaginary parts of the target separately
        n = len(target)
        for part in ([GaussianRational(t.re) for t in target], [GaussianRational(t.im) for t in target]):
            rhs = _rational_int_column(part)
            rows = [[col[i] for col in int_cols] + [rhs[i]] for i in range(n)]
            _, pivots = echelon_int(rows)
            if len(columns) in pivots:
                return False
        return True
    n = len(target)
    rows = [[col[i] for col in columns] + [target[i]] for i in range(n)]
    _, pivots = echelon(rows)
    return len(columns) not in pivots


def solve(matrix, rhs) -> list[GaussianRational]:
    """Solve a square nonsingular system exactly.

    Raises ``ValueError`` if the matrix is singular.
    """
    n = len(matrix)
    rows = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    m, pivots = echelon(rows)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    x = [ZERO] * n
    for i in range(n - 1, -1, -1):
        acc = m[i][n]
        for j in range(i + 1, n):
            acc -= m[i][j] * x[j]
        x[i] = acc / m[i][i]
    return x
