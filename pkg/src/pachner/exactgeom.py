"""Exact orientation, in-sphere and related predicates on rational points.

A point is a tuple of ``Fraction``; use ``point`` to build one from ints,
fractions or ``"p/q"`` strings. Nothing here touches floating point.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DegenerateSimplex, DimensionMismatch
from .linalg import det_sign, rank, solve, to_fraction

Point = tuple  # tuple[Fraction, ...]


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of(cls, value) -> "Sign":
        return cls((value > 0) - (value < 0))


def point(*coords) -> Point:
    if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
        coords = tuple(coords[0])
    if not coords:
        raise DimensionMismatch("a point needs at least one coordinate")
    return tuple(to_fraction(c) for c in coords)


def _common_dim(points: Sequence[Point]) -> int:
    if not points:
        raise DimensionMismatch("empty point list")
    d = len(points[0])
    for p in points:
        if len(p) != d:
            raise DimensionMismatch(f"points of dimension {d} and {len(p)} mixed")
    return d


def _sq(p: Point) -> Fraction:
    return sum((x * x for x in p), Fraction(0))


def lifted_row(p: Point) -> list:
    return [*p, _sq(p), Fraction(1)]


def orientation(points: Sequence[Point]) -> Sign:
    """Sign of det of the rows ``(p_i, 1)``."""
    d = _common_dim(points)
    if len(points) != d + 1:
        raise DimensionMismatch(f"orientation in dimension {d} needs {d + 1} points, got {len(points)}")
    return Sign(det_sign([[*p, Fraction(1)] for p in points]))


def lifted_sign(points: Sequence[Point]) -> Sign:
    """Sign of det of the paraboloid-lifted rows ``(p, |p|^2, 1)`` of d+2 points."""
    d = _common_dim(points)
    if len(points) != d + 2:
        raise DimensionMismatch(f"lifted determinant needs {d + 2} points, got {len(points)}")
    return Sign(det_sign([lifted_row(p) for p in points]))


def in_sphere(simplex: Sequence[Point], query: Point) -> Sign:
    """POSITIVE inside the circumsphere, ZERO on it, NEGATIVE outside."""
    d = _common_dim(list(simplex) + [query])
    if len(simplex) != d + 1:
        raise DimensionMismatch(f"simplex in dimension {d} needs {d + 1} vertices")
    o = orientation(simplex)
    if o == Sign.ZERO:
        raise DegenerateSimplex("flat simplex has no circumsphere")
    return Sign(int(lifted_sign([*simplex, query])) * int(o))


def co_spherical(points: Sequence[Point]) -> bool:
    """True if all points lie on one sphere (or hyperplane, the limiting case)."""
    d = _common_dim(points)
    if len(points) <= d + 1:
        return True
    return rank([lifted_row(p) for p in points]) < d + 2


def affine_rank(points: Sequence[Point]) -> int:
    _common_dim(points)
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return rank(diffs) if diffs else 0


def in_cone(target: Sequence[Fraction], generators: Sequence[Sequence[Fraction]]) -> bool:
    """Is ``target`` a nonnegative combination of ``generators``?

    Caratheodory: it suffices to try linearly independent subsets, where the
    coefficients are unique.
    """
    if all(x == 0 for x in target):
        return True
    gens = [g for g in generators if any(x != 0 for x in g)]
    if not gens:
        return False
    dim = len(target)
    for size in range(1, min(dim, len(gens)) + 1):
        for subset in combinations(gens, size):
            if rank(subset) < size:
                continue
            # columns are the generators
            cols = [[g[r] for g in subset] for r in range(dim)]
            mu = solve(cols, list(target))
            if mu is not None and all(m >= 0 for m in mu):
                return True
    return False


def relint_contains_origin(vectors: Sequence[Point]) -> bool:
    """Is 0 a strictly positive combination of all the vectors?

    Such a combination exists iff each nonzero vector's negative lies in the
    cone of the others; summing those certificates gives all-positive weights.
    """
    if not vectors:
        return False
    _common_dim(vectors)
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    for i, v in enumerate(vecs):
        if all(x == 0 for x in v):
            continue
        others = vecs[:i] + vecs[i + 1:]
        if not in_cone([-x for x in v], others):
            return False
    return True
