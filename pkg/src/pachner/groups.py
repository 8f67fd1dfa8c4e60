"""Presentations of the triangulation groups, the chain map psi and Z2 ranks.

Flavors: ``plain`` letters a_{P,Q}; ``oriented`` letters additionally carry
a twist bit (orderings of P and Q modulo reversing both).

How gon relators pick orientations is a policy:

``chirality`` (default)
    R(i), L(i) are read in increasing index order and the twist is
    corrected by the handedness of the two simplices in an exact
    realization of the diagram. Diagram t of the canonical enumeration is
    realized with handedness (-1)**t. Orderings of 2-sets count.
``ccw``
    R(i), L(i) are read counterclockwise starting just after point i;
    2-sets carry no orientation.
``sorted``
    Both sets in increasing label order; 2-sets carry no orientation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .errors import BadArity, BadParams
from .gale import StandardGaleDiagram, chirality, enumerate_standard_diagrams, left_right_sets
from .gf2 import EchelonBasis
from .words import (
    Letter,
    Word,
    canonicalize,
    cyclically_equal,
    free_reduce,
    inverse_word,
    letter,
    sequence_twist,
)

FLAVORS = ("plain", "oriented")
POLICIES = ("chirality", "ccw", "sorted")
DEFAULT_POLICY = "chirality"


def _check(n: int, k: int, flavor: str, policy: str = DEFAULT_POLICY) -> None:
    if flavor not in FLAVORS:
        raise BadParams(f"unknown flavor {flavor!r}")
    if policy not in POLICIES:
        raise BadParams(f"unknown orientation policy {policy!r}")
    lo = 5 if flavor == "oriented" else 4
    if not lo <= k <= n:
        raise BadParams(f"need {lo} <= k <= n, got n={n}, k={k}")


def _splits(U: Sequence[int]) -> Iterator[tuple]:
    # P holds min(U), so each unordered split appears once
    first, rest = U[0], U[1:]
    k = len(U)
    for size in range(1, k - 2):
        for extra in combinations(rest, size):
            P = (first, *extra)
            Q = tuple(x for x in rest if x not in extra)
            if len(Q) >= 2:
                yield P, Q


def generators(n: int, k: int, flavor: str = "plain") -> list:
    _check(n, k, flavor)
    out = []
    for U in combinations(range(1, n + 1), k):
        for P, Q in _splits(U):
            if flavor == "plain":
                out.append(letter(P, Q))
            else:
                out.extend(letter(P, Q, 1, t) for t in (0, 1))
    return out


def commutes_far(l1: Letter, l2: Letter) -> bool:
    s1, s2 = l1.support, l2.support
    return (
        len(l1.P & s2) < len(l1.P)
        and len(l1.Q & s2) < len(l1.Q)
        and len(l2.P & s1) < len(l2.P)
        and len(l2.Q & s1) < len(l2.Q)
    )


def policy_letter(P_seq, Q_seq, exponent: int = 1, policy: str = DEFAULT_POLICY) -> Letter:
    """Oriented letter from explicit orderings under a given policy."""
    return letter(P_seq, Q_seq, exponent, sequence_twist(P_seq, Q_seq, two_sets=(policy == "chirality")))


@lru_cache(maxsize=None)
def _diagram_data(l: int, policy: str) -> tuple:
    """Per diagram, per i: (R indices, L indices, twist correction), 0-based."""
    data = []
    for t, D in enumerate(enumerate_standard_diagrams(l)):
        signs = chirality(D, (-1) ** t) if policy == "chirality" else None
        rows = []
        for i in range(1, l + 1):
            R, L = left_right_sets(D, i)
            if policy == "ccw":
                order = sorted(range(1, l + 1), key=lambda j: (D.slots[j - 1] - D.slots[i - 1]) % (2 * l))
                Rs = [j - 1 for j in order if j in R]
                Ls = [j - 1 for j in order if j in L]
            else:
                Rs = [j - 1 for j in sorted(R)]
                Ls = [j - 1 for j in sorted(L)]
            fix = int(signs[i - 1] > 0) if signs is not None else 0
            rows.append((tuple(Rs), tuple(Ls), fix))
        data.append((D, tuple(rows)))
    return tuple(data)


def gon_relator(diagram_index: int, M: Sequence[int], l: int, flavor: str = "plain", policy: str = DEFAULT_POLICY) -> Word:
    """The (l)-gon relator of the diagram_index-th standard diagram of order l."""
    D, rows = _diagram_data(l, policy)[diagram_index]
    if len(M) != l or len(set(M)) != l:
        raise BadArity(f"need {l} distinct labels")
    out = []
    for Rs, Ls, fix in rows:
        P = [M[j] for j in Rs]
        Q = [M[j] for j in Ls]
        if flavor == "plain":
            out.append(letter(P, Q))
        elif policy == "sorted":
            out.append(letter(P, Q, 1, 0))
        elif policy == "ccw":
            out.append(letter(P, Q, 1, sequence_twist(P, Q, two_sets=False)))
        else:
            out.append(letter(P, Q, 1, sequence_twist(P, Q) ^ fix))
    return tuple(out)


def _extra_commuting(a: Letter, b: Letter) -> bool:
    # a = a_{X,Y}; b = a_{X,Z} or b = a_{{x1,u},{x2,v}} with X = {x1,x2},
    # where the new labels u, v avoid X and meet Y in at most one label
    if a.k != 4 or b.k != 4:
        return False
    for X, Y in ((a.P, a.Q), (a.Q, a.P)):
        for S, T in ((b.P, b.Q), (b.Q, b.P)):
            if S == X and T != Y and not T & X and len(T & Y) <= 1:
                return True
        if len(b.P & X) == 1 and len(b.Q & X) == 1:
            new = b.support - X
            if len(new) == 2 and len(new & Y) <= 1:
                return True
    return False


def commutator(a: Letter, b: Letter) -> Word:
    return (a, b, a.inverse(), b.inverse())


@dataclass
class Presentation:
    n: int
    k: int
    flavor: str = "plain"
    policy: str = DEFAULT_POLICY
    involutive: bool = False  # extra pack a^2 = 1, only meaningful for k = 4
    _gens: list | None = field(default=None, repr=False)
    _index: dict | None = field(default=None, repr=False)

    def __post_init__(self):
        _check(self.n, self.k, self.flavor, self.policy)

    @property
    def generators(self) -> list:
        if self._gens is None:
            self._gens = generators(self.n, self.k, self.flavor)
            self._index = {g: i for i, g in enumerate(self._gens)}
        return self._gens

    def index(self, l: Letter) -> int:
        self.generators
        g = canonicalize(l).generator
        if self.flavor == "plain" and g.twist is not None:
            g = letter(g.P, g.Q)
        try:
            return self._index[g]
        except KeyError:
            raise BadParams(f"{g} is not a generator of this presentation") from None

    def diagrams(self) -> list:
        return [D for D, _ in _diagram_data(self.k + 1, self.policy)]

    def gon_relators(self) -> Iterator[Word]:
        l = self.k + 1
        for t in range(len(self.diagrams())):
            for M in permutations(range(1, self.n + 1), l):
                yield gon_relator(t, M, l, self.flavor, self.policy)

    def far_relators(self) -> Iterator[Word]:
        gens = self.generators
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if commutes_far(a, b):
                    yield commutator(a, b)

    def extra_relators(self) -> Iterator[Word]:
        """The involutive pack (k = 4): squares and two extra commutation families."""
        if not self.involutive:
            return
        gens = self.generators
        for g in gens:
            yield (g, g)
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if not commutes_far(a, b) and (_extra_commuting(a, b) or _extra_commuting(b, a)):
                    yield commutator(a, b)

    def relators(self) -> Iterator[Word]:
        yield from self.far_relators()
        yield from self.gon_relators()
        yield from self.extra_relators()

    def count_gon_relators(self) -> int:
        return sum(1 for _ in self.gon_relators())

    def ab_row(self, w: Iterable[Letter]) -> int:
        """Exponent sums mod 2 as a bitset over generator indices."""
        row = 0
        for l in w:
            row ^= 1 << self.index(l)
        return row

    def ab_basis(self) -> EchelonBasis:
        # commutators and squares vanish mod 2, only gon relators matter
        return EchelonBasis(self.ab_row(r) for r in self.gon_relators())


def presentation(n: int, k: int, flavor: str = "plain", policy: str = DEFAULT_POLICY, involutive: bool = False) -> Presentation:
    return Presentation(n, k, flavor, policy, involutive)


def abelianization_rank_z2(pres: Presentation | None, extra_words: Sequence[Word] = ()) -> int:
    if pres is None:
        return 0
    basis = pres.ab_basis()
    basis.update(pres.ab_row(w) for w in extra_words)
    return basis.rank


def is_nontrivial_ab_z2(w: Word, pres: Presentation) -> bool:
    return not pres.ab_basis().contains(pres.ab_row(w))


# -- chains ---------------------------------------------------------------


@dataclass(frozen=True)
class Chain:
    n: int
    d: int
    support: frozenset = frozenset()

    def __post_init__(self):
        sup = frozenset(tuple(sorted(s)) for s in self.support)
        object.__setattr__(self, "support", sup)
        if any(len(s) != self.d + 1 for s in sup):
            raise BadArity(f"a {self.d}-chain is supported on {self.d + 1}-subsets")

    def __add__(self, other: "Chain") -> "Chain":
        if (self.n, self.d) != (other.n, other.d):
            raise BadArity("chains over different complexes")
        return Chain(self.n, self.d, self.support ^ other.support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def is_zero(self) -> bool:
        return not self.support

    @classmethod
    def zero(cls, n: int, d: int) -> "Chain":
        return cls(n, d)


def boundary(S: Iterable[int], n: int | None = None) -> Chain:
    S = tuple(sorted(S))
    if len(S) < 2:
        raise BadArity("boundary needs at least two labels")
    n = max(S) if n is None else n
    return Chain(n, len(S) - 2, frozenset(tuple(x for x in S if x != s) for s in S))


def boundary_of_chain(c: Chain) -> Chain:
    out: set = set()
    for s in c.support:
        for v in s:
            out ^= {tuple(x for x in s if x != v)}
    return Chain(c.n, c.d - 1, frozenset(out))


def psi(w: Iterable[Letter], n: int, d: int) -> Chain:
    support: set = set()
    for l in w:
        if l.k != d + 2:
            raise BadArity(f"letter {l} does not have {d + 2} labels")
        support ^= boundary(l.support, n).support
    return Chain(n, d, frozenset(support))


def relabel(w: Iterable[Letter], sigma: dict) -> Word:
    return tuple(letter([sigma[x] for x in l.P], [sigma[x] for x in l.Q], l.exponent, l.twist) for l in w)


def same_family(a: Word, b: Word, labels: Sequence[int]) -> bool:
    """Equal up to relabeling, cyclic rotation and inversion (plain words)."""
    for perm in permutations(labels):
        if cyclically_equal(relabel(a, dict(zip(labels, perm))), b):
            return True
    return False


def relator_families(l: int) -> list:
    """Greedy classes of the order-l relation words on labels 1..l."""
    words = [gon_relator(t, tuple(range(1, l + 1)), l) for t in range(len(enumerate_standard_diagrams(l)))]
    families: list = []
    for w in words:
        if not any(same_family(w, rep, range(1, l + 1)) for rep in families):
            families.append(w)
    return families
