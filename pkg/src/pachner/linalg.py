"""Exact linear algebra over the rationals.

Matrices are sequences of rows; entries are anything ``Fraction`` accepts.
Determinants are computed fraction-free (Bareiss) after clearing
denominators row by row, which keeps the integers small and the signs exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Matrix = Sequence[Sequence[Fraction]]


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` or ``"-0.25"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        # floats are accepted only when they are exactly representable as typed
        return Fraction(repr(value))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _integer_row(row: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for x in row:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in row], den


def _bareiss(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            a = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - a * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def int_det(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    return _bareiss([list(r) for r in rows])


def det(rows: Matrix) -> Fraction:
    ints = []
    scale = 1
    for row in rows:
        r, den = _integer_row(row)
        ints.append(r)
        scale *= den
    return Fraction(int_det(ints), scale)


def det_sign(rows: Matrix) -> int:
    """Sign of the determinant; each row is scaled by a positive integer first."""
    value = int_det([_integer_row(row)[0] for row in rows])
    return (value > 0) - (value < 0)


def rref(rows: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form and pivot columns. Zero rows are dropped."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Matrix, ncols: int) -> list[list[Fraction]]:
    """Basis of ``{b : A b = 0}`` read off the reduced row-echelon form."""
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(a_rows: Matrix, rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """One exact solution of ``A x = rhs`` (free variables set to 0), or None."""
    if not a_rows:
        return None
    ncols = len(a_rows[0])
    aug = [list(row) + [b] for row, b in zip(a_rows, rhs)]
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return x


def primitive_integer(vector: Iterable[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to coprime integers."""
    v = [Fraction(x) for x in vector]
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def permutation_parity(seq: Sequence) -> int:
    """0 for an even arrangement of distinct sortable items, 1 for odd."""
    seq = list(seq)
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inversions += 1
    return inversions & 1
