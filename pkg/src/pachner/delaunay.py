"""Delaunay and regular triangulations as projected lower hulls.

Desk scale only: every (d+1)-subset is tested as a candidate lower facet,
which is quadratic-ish in C(n, d+1) but exact and easy to trust.
Labels are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from .errors import (
    DegenerateConfiguration,
    DegenerateLift,
    DimensionMismatch,
    ExcludedConfiguration,
    RankDeficient,
)
from .exactgeom import Sign, affine_rank, in_sphere, orientation, point
from .linalg import int_det, rank

Simplex = tuple  # sorted tuple of labels


@dataclass(frozen=True)
class Configuration:
    points: tuple  # tuple of Points, label i is points[i - 1]

    def __post_init__(self):
        pts = tuple(point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise DimensionMismatch("empty configuration")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise DimensionMismatch("points of different dimensions")
        if len(set(pts)) != len(pts):
            raise RankDeficient("configuration has repeated points")
        if len(pts) < d + 1 or affine_rank(pts) != d:
            raise RankDeficient(f"points do not span R^{d}")

    @property
    def dim(self) -> int:
        return len(self.points[0])

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> range:
        return range(1, self.n + 1)

    def __getitem__(self, label: int):
        return self.points[label - 1]

    def coords(self, labels: Iterable[int]) -> list:
        return [self.points[i - 1] for i in labels]


@dataclass(frozen=True)
class Triangulation:
    dim: int
    n: int
    simplices: frozenset

    def __post_init__(self):
        object.__setattr__(self, "simplices", frozenset(tuple(sorted(s)) for s in self.simplices))

    def sorted(self) -> list:
        return sorted(self.simplices)

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self):
        return iter(self.sorted())

    def key(self) -> tuple:
        return tuple(self.sorted())


def _integerized(config: Configuration, heights: Sequence[Fraction]):
    """Integer rows ``(x, h, 1)``; x and h are scaled independently (both by
    positive factors), which keeps lower facets lower."""
    dx = 1
    for p in config.points:
        for c in p:
            dx = lcm(dx, c.denominator)
    dh = 1
    for h in heights:
        dh = lcm(dh, Fraction(h).denominator)
    return [[int(c * dx) for c in p] + [int(Fraction(h) * dh), 1] for p, h in zip(config.points, heights)]


def _facet_cofactors(rows: list[list[int]], subset: Sequence[int], d: int) -> list[int]:
    # f(q) = det[rows of subset; q] = sum_j c_j q_j, expanding along the last row
    block = [rows[i] for i in subset]
    out = []
    for j in range(d + 2):
        minor = [r[:j] + r[j + 1:] for r in block]
        out.append((-1) ** (d + 1 + j) * int_det(minor))
    return out


def lower_hull(config: Configuration, heights: Sequence | None = None) -> set:
    """Label sets of the lower facets of the lifted points ``(x_i, h_i)``.

    Default heights are ``|x_i|^2``. Raises DegenerateLift when a lower facet
    carries more than d+1 lifted points.
    """
    d = config.dim
    if heights is None:
        heights = [sum((c * c for c in p), Fraction(0)) for p in config.points]
    heights = [Fraction(h) for h in heights]
    if len(heights) != config.n:
        raise DimensionMismatch("one height per point required")
    rows = _integerized(config, heights)
    n = config.n
    facets = set()
    for subset in combinations(range(n), d + 1):
        base = int_det([rows[i][:d] + [1] for i in subset])
        if base == 0:
            continue
        sgn = 1 if base > 0 else -1
        c = _facet_cofactors(rows, subset, d)
        on_plane = []
        ok = True
        for q in range(n):
            if q in subset:
                continue
            v = sgn * sum(a * b for a, b in zip(c, rows[q]))
            if v > 0:
                ok = False
                break
            if v == 0:
                on_plane.append(q)
        if not ok:
            continue
        if on_plane:
            labels = [i + 1 for i in (*subset, *on_plane)]
            raise DegenerateLift(labels, f"lower facet through {sorted(labels)} is not a simplex")
        facets.add(tuple(i + 1 for i in subset))
    return facets


def check_excluded(config: Configuration) -> None:
    """Reject d+1 points lying on a common (d-2)-sphere (lifted rank <= d)."""
    d = config.dim
    if d < 3:
        return
    for subset in combinations(config.labels, d + 1):
        pts = config.coords(subset)
        if orientation(pts) != Sign.ZERO:
            continue
        lifted = [[*p, sum((c * c for c in p), Fraction(0)), Fraction(1)] for p in pts]
        if rank(lifted) <= d:
            raise ExcludedConfiguration(subset)


def delaunay(config: Configuration) -> Triangulation:
    check_excluded(config)
    try:
        facets = lower_hull(config)
    except DegenerateLift as exc:
        raise DegenerateConfiguration(exc.labels, str(exc)) from None
    return Triangulation(config.dim, config.n, frozenset(facets))


def _closed_contains(pts: Sequence, q) -> bool:
    o = orientation(pts)
    for i in range(len(pts)):
        swapped = list(pts)
        swapped[i] = q
        s = orientation(swapped)
        if s != o and s != Sign.ZERO:
            return False
    return True


def is_delaunay(config: Configuration, tri: Triangulation) -> bool:
    """Empty open circumballs plus a facet-pairing and degree-one tiling check."""
    d = config.dim
    if tri.dim != d or not tri.simplices:
        return False
    labels = set(config.labels)
    for s in tri.simplices:
        if len(s) != d + 1 or not set(s) <= labels:
            return False
        pts = config.coords(s)
        if orientation(pts) == Sign.ZERO:
            return False
        for q in labels.difference(s):
            if in_sphere(pts, config[q]) == Sign.POSITIVE:
                return False

    # facet pairing
    incident: dict = {}
    for s in tri.simplices:
        for v in s:
            face = tuple(x for x in s if x != v)
            incident.setdefault(face, []).append(v)
    for face, opposite in incident.items():
        fpts = config.coords(face)
        if len(opposite) > 2:
            return False
        if len(opposite) == 2:
            a = orientation([*fpts, config[opposite[0]]])
            b = orientation([*fpts, config[opposite[1]]])
            if a == b:
                return False
        else:
            side = orientation([*fpts, config[opposite[0]]])
            for q in labels.difference(face):
                if orientation([*fpts, config[q]]) == -side:
                    return False

    # constant covering degree is now guaranteed; check it is one
    simplices = tri.sorted()
    for s in simplices:
        pts = config.coords(s)
        centroid = tuple(sum(c) / (d + 1) for c in zip(*pts))
        for t in simplices:
            if t != s and _closed_contains(config.coords(t), centroid):
                return False
    return True


def brute_force_delaunay(config: Configuration) -> set:
    """Oracle: simplices whose circumsphere has no other point inside or on it."""
    out = set()
    for s in combinations(config.labels, config.dim + 1):
        pts = config.coords(s)
        if orientation(pts) == Sign.ZERO:
            continue
        if all(in_sphere(pts, config[q]) == Sign.NEGATIVE for q in config.labels if q not in s):
            out.add(s)
    return out
