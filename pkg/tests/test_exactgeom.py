from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from pachner.errors import DegenerateSimplex, DimensionMismatch
from pachner.exactgeom import (
    Sign,
    affine_rank,
    co_spherical,
    in_sphere,
    orientation,
    point,
    relint_contains_origin,
)
from pachner.linalg import det, det_sign, nullspace, rank, rref

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def cofactor_det(m):
    """Oracle: Laplace expansion along the first row."""
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))


def sphere_point(u, v, r=1, center=(0, 0, 0)):
    u, v = Fraction(u), Fraction(v)
    q = u * u + v * v
    raw = (2 * u / (q + 1), 2 * v / (q + 1), (q - 1) / (q + 1))
    return point(*(c + r * x for c, x in zip(center, raw)))


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_cofactor_oracle(m):
    assert det(m) == cofactor_det(m)
    expected = cofactor_det(m)
    assert det_sign(m) == (expected > 0) - (expected < 0)


@given(st.lists(st.lists(rationals, min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_and_nullspace_match_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()
    for v in nullspace(rows, 4):
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    assert len(nullspace(rows, 4)) == 4 - rank(rows)


def test_rref_known():
    red, piv = rref([[2, 4], [1, 3]])
    assert piv == [0, 1] and red == [[1, 0], [0, 1]]


def test_orientation_examples():
    assert orientation([point(0, 0), point(1, 0), point(0, 1)]) == Sign.POSITIVE
    assert orientation([point(0, 0), point(1, 1), point(2, 2)]) == Sign.ZERO
    rng = random.Random(3)
    pts = [point(*(Fraction(rng.randint(-30, 30), rng.randint(1, 5)) for _ in range(3))) for _ in range(4)]
    expected = cofactor_det([[*p, 1] for p in pts])
    assert orientation(pts) == Sign.of(expected)


def test_orientation_dimension_errors():
    with pytest.raises(DimensionMismatch):
        orientation([point(0, 0), point(1, 0)])
    with pytest.raises(DimensionMismatch):
        orientation([point(0, 0), point(1, 0, 0), point(0, 1)])


@given(st.lists(st.tuples(rationals, rationals, rationals), min_size=4, max_size=4), st.integers(0, 3), st.integers(0, 3))
def test_orientation_alternates(pts, i, j):
    pts = [point(*p) for p in pts]
    s = orientation(pts)
    if i != j:
        swapped = list(pts)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert orientation(swapped) == -s


def test_in_sphere_examples():
    tri = [point(1, 0), point(-1, 0), point(0, 1)]
    assert in_sphere(tri, point(0, 0)) == Sign.POSITIVE
    assert in_sphere(tri, point(0, -1)) == Sign.ZERO
    tet = [point(0, 0, 0), point(1, 0, 0), point(0, 1, 0), point(0, 0, 1)]
    assert in_sphere(tet, point(10, 10, 10)) == Sign.NEGATIVE
    assert in_sphere(tet, point(Fraction(1, 4), Fraction(1, 4), Fraction(1, 4))) == Sign.POSITIVE
    with pytest.raises(DegenerateSimplex):
        in_sphere([point(0, 0), point(1, 1), point(2, 2)], point(5, 0))


@given(st.lists(st.tuples(rationals, rationals), min_size=4, max_size=4), st.permutations(range(3)))
def test_in_sphere_invariances(pts, perm):
    pts = [point(*p) for p in pts]
    simplex, q = pts[:3], pts[3]
    if orientation(simplex) == Sign.ZERO:
        return
    s = in_sphere(simplex, q)
    assert in_sphere([simplex[k] for k in perm], q) == s
    for v in simplex:
        assert in_sphere(simplex, v) == Sign.ZERO
    shift = (Fraction(7, 3), Fraction(-2))
    moved = [tuple(a + b for a, b in zip(p, shift)) for p in pts]
    assert in_sphere(moved[:3], moved[3]) == s
    scaled = [tuple(Fraction(5, 2) * a for a in p) for p in pts]
    assert in_sphere(scaled[:3], scaled[3]) == s
    if s == Sign.ZERO:
        assert co_spherical(pts)


def test_co_spherical():
    square = [point(1, 0), point(-1, 0), point(0, 1), point(0, -1)]
    assert co_spherical(square)
    assert not co_spherical(square + [point(2, 0)])
    uv = [(0, 0), (1, 2), (-3, 1), (Fraction(1, 2), 5), (2, -7)]
    sphere = [sphere_point(u, v, r=3, center=(1, -2, Fraction(1, 3))) for u, v in uv]
    assert co_spherical(sphere)
    assert not co_spherical(sphere[:4] + [point(0, 0, 0)])
    assert co_spherical([point(0, 0), point(5, 1)])


def test_affine_rank():
    assert affine_rank([point(1, 2, 3)]) == 0
    assert affine_rank([point(0, 0, 0), point(1, 1, 1), point(2, 2, 2)]) == 1
    rng = random.Random(5)
    pts = [point(*(rng.randint(-9, 9) for _ in range(3))) for _ in range(5)]
    assert affine_rank(pts) == sympy.Matrix([[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]).rank()


def test_relint_contains_origin():
    assert relint_contains_origin([point(1, 0), point(-1, 0)])
    assert not relint_contains_origin([point(1, 0), point(0, 1)])
    pentagon_gale = [point(-4, -4), point(1, 6), point(3, -7), point(-5, 5), point(5, 0)]
    assert relint_contains_origin(pentagon_gale)
    assert not relint_contains_origin(pentagon_gale[:2])
    assert relint_contains_origin([point(0, 0)])
    assert not relint_contains_origin([])
    # origin on the boundary of the hull, not in the relative interior
    assert not relint_contains_origin([point(1, 0), point(-1, 0), point(0, 1)])
    assert relint_contains_origin([point(1, 0), point(-1, 0), point(0, 1), point(0, -1)])


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=5))
def test_relint_matches_lp(vecs):
    from scipy.optimize import linprog

    vecs = [point(*v) for v in vecs]
    n = len(vecs)
    # maximise t with lambda_i >= t, sum lambda = 1, sum lambda v = 0
    A_eq = [[float(v[0]) for v in vecs] + [0], [float(v[1]) for v in vecs] + [0], [1.0] * n + [0]]
    A_ub = [[-1.0 if j == i else 0.0 for j in range(n)] + [1.0] for i in range(n)]
    res = linprog([0] * n + [-1], A_ub=A_ub, b_ub=[0] * n, A_eq=A_eq, b_eq=[0, 0, 1], bounds=[(0, None)] * n + [(None, 1)])
    lp = res.status == 0 and -res.fun > 1e-9
    assert relint_contains_origin(vecs) == lp
