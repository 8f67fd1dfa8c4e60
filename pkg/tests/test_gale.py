from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest
import sympy

from pachner.delaunay import Configuration
from pachner.errors import BadArity, BadParams
from pachner.exactgeom import Sign, orientation
from pachner.gale import (
    StandardGaleDiagram,
    canonical_slots,
    chirality,
    count_standard_diagrams,
    enumerate_standard_diagrams,
    faces_from_gale,
    gale_diagram,
    gale_transform,
    is_standard,
    left_right_sets,
    lifted_matrix,
    realize,
    relation_word,
)
from pachner.words import letter

PENTAGON = Configuration(((0, 2), (-2, 1), (-1, -1), (1, -1), (2, 1)))


def hull_faces_2d(c):
    """Oracle for a convex polygon: vertices, hull edges and the polygon."""
    faces = {frozenset(c.labels)}
    for i, j in combinations(c.labels, 2):
        sides = {orientation([c[i], c[j], c[q]]) for q in c.labels if q not in (i, j)}
        if Sign.ZERO not in sides and len(sides) == 1:
            faces.add(frozenset((i, j)))
    for v in c.labels:
        faces.add(frozenset((v,)))
    return faces


def test_pentagon_gale_row_space():
    gv = gale_transform(PENTAGON)
    expected = [[-4, 1, 3, -5, 5], [-4, 6, -7, 5, 0]]
    assert sympy.Matrix([list(r) for r in gv.rows] + expected).rank() == 2
    assert sympy.Matrix([list(r) for r in gv.rows]).rank() == 2


def test_defining_identity_and_canonical_basis():
    c = Configuration(((0, 0, 0), (3, 1, 0), (1, 4, 1), (0, 1, 5), (2, 2, 2), (-1, 3, 1)))
    gv = gale_transform(c)
    M = lifted_matrix(c)
    for row in M:
        for b in gv.rows:
            assert sum(x * y for x, y in zip(row, b)) == 0
    assert gv.dim == c.n - c.dim - 1
    assert all(isinstance(x, int) for r in gv.rows for x in r)


def test_simplex_plus_barycenter():
    c = Configuration(((0, 0), (3, 0), (0, 3), (1, 1)))
    gv = gale_transform(c)
    assert gv.dim == 1
    signs = [(x > 0) - (x < 0) for x in gv.rows[0]]
    assert signs in ([1, 1, 1, -1], [-1, -1, -1, 1])


def test_gale_diagram_directions():
    d = gale_diagram(gale_transform(PENTAGON))
    assert all(any(v) for v in d.directions)
    for a, b in combinations(d.directions, 2):
        assert a[0] * b[1] - a[1] * b[0] != 0
    scaled = Configuration(tuple(tuple(Fraction(3, 7) * x for x in p) for p in PENTAGON.points))
    assert gale_diagram(gale_transform(scaled)) == d


def test_zero_gale_vector():
    # label 5 is a cone apex over a square: its Gale vector vanishes
    c = Configuration(((0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0), (1, 1, 3)))
    d = gale_diagram(gale_transform(c))
    assert d.is_zero(5) and not d.is_zero(1)


def test_faces_of_pentagon():
    faces = faces_from_gale(gale_diagram(gale_transform(PENTAGON)))
    assert faces == hull_faces_2d(PENTAGON)
    assert len([f for f in faces if len(f) == 2]) == 5


def test_faces_of_square_pyramid():
    c = Configuration(((0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0), (1, 1, 3)))
    faces = faces_from_gale(gale_diagram(gale_transform(c)))
    assert frozenset({1, 2, 3, 4}) in faces  # the square base
    assert frozenset({1, 3}) not in faces  # a diagonal of the base
    assert sum(1 for f in faces if len(f) == 2) == 8
    assert sum(1 for f in faces if len(f) == 1) == 5


def test_enumeration_small_orders():
    assert [len(enumerate_standard_diagrams(l)) for l in (5, 6, 7)] == [1, 2, 5]
    assert enumerate_standard_diagrams(5)[0].slots == (0, 2, 4, 6, 8)
    assert [D.slots for D in enumerate_standard_diagrams(6)] == [(0, 1, 3, 5, 8, 10), (0, 1, 4, 5, 8, 9)]


def test_formula_matches_enumeration():
    for l in range(5, 11):
        assert count_standard_diagrams(l) == len(enumerate_standard_diagrams(l))
    assert count_standard_diagrams(5) == 1 and count_standard_diagrams(7) == 5


def test_brute_force_enumeration_oracle():
    # independent path: all l-subsets of the 2l slots
    for l in (5, 6, 7, 8):
        orbits = {canonical_slots(S, l) for S in combinations(range(2 * l), l) if is_standard(S, l)}
        assert len(orbits) == len(enumerate_standard_diagrams(l))


def test_standard_validation():
    with pytest.raises(BadParams):
        StandardGaleDiagram(5, (0, 1, 2, 3, 4))  # an empty open half-plane
    with pytest.raises(BadParams):
        StandardGaleDiagram(5, (0, 5, 2, 4, 6))  # antipodal pair
    with pytest.raises(BadParams):
        enumerate_standard_diagrams(4)


def test_left_right_pentagon():
    D = enumerate_standard_diagrams(5)[0]
    assert left_right_sets(D, 1) == ({4, 5}, {2, 3})
    assert left_right_sets(D, 2) == ({1, 5}, {3, 4})
    with pytest.raises(BadArity):
        left_right_sets(D, 6)


def test_left_right_partition():
    for l in (5, 6, 7, 8):
        for D in enumerate_standard_diagrams(l):
            for i in range(1, l + 1):
                R, L = left_right_sets(D, i)
                assert R | L == set(range(1, l + 1)) - {i} and not R & L
                assert len(R) >= 2 and len(L) >= 2


def test_pentagon_relation_word():
    D = enumerate_standard_diagrams(5)[0]
    w = relation_word(D, (1, 2, 3, 4, 5))
    expected = [letter(P, Q) for P, Q in [((4, 5), (2, 3)), ((1, 5), (3, 4)), ((1, 2), (4, 5)), ((2, 3), (1, 5)), ((3, 4), (1, 2))]]
    assert list(w) == expected
    with pytest.raises(BadArity):
        relation_word(D, (1, 2, 3, 4))
    with pytest.raises(BadArity):
        relation_word(D, (1, 2, 3, 4, 4))


def test_relation_letters_have_k_labels():
    for l in (5, 6, 7):
        for D in enumerate_standard_diagrams(l):
            for i, x in enumerate(relation_word(D, tuple(range(1, l + 1))), start=1):
                assert x.support == set(range(1, l + 1)) - {i}


def test_realization_has_the_diagram():
    for l in (5, 6, 7):
        for D in enumerate_standard_diagrams(l):
            c = realize(D)
            assert c.dim == l - 3
            d = gale_diagram(gale_transform(c))
            # same cyclic order of directions, no zero vectors
            angles = sorted(range(l), key=lambda j: sympy.atan2(d.directions[j][1], d.directions[j][0]) % (2 * sympy.pi))
            rot = angles.index(0)
            cyc = angles[rot:] + angles[:rot]
            assert cyc in (list(range(l)), [0] + list(range(l - 1, 0, -1)))
            faces = faces_from_gale(d)
            assert all(frozenset((v,)) in faces for v in range(1, l + 1))


def test_chirality_mirror_flips_every_sign():
    for D in enumerate_standard_diagrams(6):
        a, b = chirality(D, 1), chirality(D, -1)
        assert all(x == -y != 0 for x, y in zip(a, b))
