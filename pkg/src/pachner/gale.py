"""Gale transforms, Gale diagrams and standard Gale diagrams.

Standard diagrams live on the 2l-gon: slot p is the direction at angle
pi*p/l. All half-plane questions are answered with integer slot arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import cos, gcd, pi, sin
from typing import Sequence

from .delaunay import Configuration
from .errors import BadArity, BadParams, RankDeficient
from .exactgeom import affine_rank, relint_contains_origin
from .linalg import det_sign, nullspace, primitive_integer, rref
from .words import Word, letter


@dataclass(frozen=True)
class GaleVectors:
    rows: tuple  # rows of B, each of length n

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def vectors(self) -> list:
        """The Gale vectors y_1..y_n (columns of B)."""
        return [tuple(r[j] for r in self.rows) for j in range(self.n)]


@dataclass(frozen=True)
class GaleDiagram:
    directions: tuple  # primitive integer vector per label, all-zero for zero vectors

    @property
    def n(self) -> int:
        return len(self.directions)

    def is_zero(self, label: int) -> bool:
        return not any(self.directions[label - 1])


def lifted_matrix(config: Configuration) -> list:
    """Rows are the coordinate rows of the points followed by a row of ones."""
    rows = [[p[c] for p in config.points] for c in range(config.dim)]
    rows.append([Fraction(1)] * config.n)
    return rows


def gale_transform(config: Configuration) -> GaleVectors:
    if affine_rank(config.points) < config.dim:
        raise RankDeficient("configuration is not full-dimensional")
    if config.n < config.dim + 2:
        raise BadParams("a Gale transform needs at least d+2 points")
    M = lifted_matrix(config)
    kernel = nullspace(M, config.n)
    reduced, _ = rref(kernel)
    return GaleVectors(tuple(primitive_integer(r) for r in reduced))


def gale_diagram(gv: GaleVectors) -> GaleDiagram:
    return GaleDiagram(tuple(primitive_integer(y) for y in gv.vectors))


def faces_from_gale(diagram: GaleDiagram) -> set:
    """Nonempty faces J: those with 0 in relint of the complementary vectors.

    J = N (nothing left over) is the polytope itself and is always included.
    """
    n = diagram.n
    labels = range(1, n + 1)
    faces = {frozenset(labels)}
    for size in range(1, n):
        for J in combinations(labels, size):
            rest = [diagram.directions[i - 1] for i in labels if i not in J]
            if relint_contains_origin(rest):
                faces.add(frozenset(J))
    return faces


# -- standard diagrams ----------------------------------------------------


@dataclass(frozen=True)
class StandardGaleDiagram:
    order: int
    slots: tuple  # sorted slots in range(2 * order)

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(sorted(self.slots)))
        if not is_standard(self.slots, self.order):
            raise BadParams(f"slots {self.slots} do not form a standard diagram of order {self.order}")


def is_standard(slots: Sequence[int], l: int) -> bool:
    s = set(slots)
    if len(s) != l or len(slots) != l or not all(0 <= p < 2 * l for p in s):
        return False
    if any((p + l) % (2 * l) in s for p in s):
        return False
    # open half-planes: work in half-slot units so the bounding diameter can
    # sit on a slot or between two slots
    for a in range(4 * l):
        if sum(1 for p in s if 0 < (2 * p - a) % (4 * l) < 2 * l) < 2:
            return False
    return True


def canonical_slots(slots: Sequence[int], l: int) -> tuple:
    """Lexicographically least slot tuple under the dihedral group of the 2l-gon."""
    best = None
    for r in range(2 * l):
        for f in (1, -1):
            cand = tuple(sorted((f * p + r) % (2 * l) for p in slots))
            if best is None or cand < best:
                best = cand
    return best


def enumerate_standard_diagrams(l: int) -> list:
    if l < 5:
        raise BadParams("standard diagrams need order >= 5")
    found = set()
    # no antipodal pair and l points means exactly one slot per diameter
    for choice in product((0, 1), repeat=l):
        slots = [p + l * c for p, c in enumerate(choice)]
        if is_standard(slots, l):
            found.add(canonical_slots(slots, l))
    return [StandardGaleDiagram(l, s) for s in sorted(found)]


def _phi(h: int) -> int:
    return sum(1 for j in range(1, h + 1) if gcd(j, h) == 1)


def count_standard_diagrams(l: int) -> int:
    """Closed formula for the number of standard diagrams of order l."""
    if l < 5:
        raise BadParams("standard diagrams need order >= 5")
    necklace = sum(_phi(h) * 2 ** (l // h) for h in range(1, l + 1, 2) if l % h == 0)
    assert necklace % (4 * l) == 0
    return 2 ** ((l - 3) // 2) - (l + 1) // 2 + necklace // (4 * l)


def left_right_sets(diagram: StandardGaleDiagram, i: int) -> tuple:
    """(R(i), L(i)) as frozensets of 1-based indices, points numbered ccw."""
    l = diagram.order
    if not 1 <= i <= l:
        raise BadArity(f"index {i} outside 1..{l}")
    si = diagram.slots[i - 1]
    R, L = [], []
    for j, sj in enumerate(diagram.slots, start=1):
        if j == i:
            continue
        # ccw offset below a half turn means the left side of the ray
        (L if (sj - si) % (2 * l) < l else R).append(j)
    return frozenset(R), frozenset(L)


def relation_word(diagram: StandardGaleDiagram, M: Sequence[int]) -> Word:
    l = diagram.order
    if len(M) != l or len(set(M)) != l:
        raise BadArity(f"need {l} distinct labels, got {list(M)}")
    out = []
    for i in range(1, l + 1):
        R, L = left_right_sets(diagram, i)
        out.append(letter([M[j - 1] for j in R], [M[j - 1] for j in L]))
    return tuple(out)


# -- exact realization ----------------------------------------------------


def unit_direction(p: int, l: int, denominator: int = 10**4) -> tuple:
    """Rational point close to the slot direction; the angular order is kept."""
    t = pi * p / l
    return (Fraction(cos(t)).limit_denominator(denominator), Fraction(sin(t)).limit_denominator(denominator))


def _cone2(target, a, b):
    # target = alpha a + beta b in the plane
    det = a[0] * b[1] - a[1] * b[0]
    alpha = (target[0] * b[1] - target[1] * b[0]) / det
    beta = (a[0] * target[1] - a[1] * target[0]) / det
    return alpha, beta


def realize(diagram: StandardGaleDiagram, handedness: int = 1) -> Configuration:
    """An exact simplicial polytope in R^(l-3) with this Gale diagram.

    The Gale vectors are lambda_j * y_j for positive weights lambda summed from
    planar circuits. Deterministic; ``handedness=-1`` returns the mirror.
    """
    l = diagram.order
    slots = diagram.slots
    ys = [unit_direction(p, l) for p in slots]
    lam = [Fraction(0)] * l
    for j, p in enumerate(slots):
        anti = (p + l) % (2 * l)
        # occupied neighbours bracketing the antipode
        before = min(range(l), key=lambda m: (anti - slots[m]) % (2 * l))
        after = min(range(l), key=lambda m: (slots[m] - anti) % (2 * l))
        target = (-ys[j][0], -ys[j][1])
        alpha, beta = _cone2(target, ys[before], ys[after])
        assert alpha > 0 and beta > 0
        lam[j] += 1
        lam[before] += alpha
        lam[after] += beta
    B = [[lam[j] * ys[j][c] for j in range(l)] for c in range(2)]
    e0 = [Fraction(1)] + [Fraction(0)] * (l - 1)
    U = nullspace(B + [e0], l)
    assert len(U) == l - 3
    ones = [Fraction(1)] * l
    stacked = U + [ones] + B
    sign = det_sign(stacked) * handedness
    if sign < 0:
        U[0] = [-x for x in U[0]]
    points = [tuple(u[j] for u in U) for j in range(l)]
    return Configuration(tuple(points))


def chirality(diagram: StandardGaleDiagram, handedness: int = 1) -> tuple:
    """Per letter i: sign of det of the edge vectors of the R(i) and L(i)
    simplices (indices in increasing order, R block first) in the realization."""
    conf = realize(diagram, handedness)
    out = []
    for i in range(1, diagram.order + 1):
        R, L = left_right_sets(diagram, i)
        vecs = []
        for block in (sorted(R), sorted(L)):
            base = conf[block[0]]
            for j in block[1:]:
                vecs.append([a - b for a, b in zip(conf[j], base)])
        out.append(det_sign(vecs))
    return tuple(out)
