"""Letters a_{P,Q} and words over them.

A letter is stored canonically with ``min(P) < min(Q)``; a_{Q,P} becomes
a_{P,Q}^-1. Oriented letters carry a ``twist`` bit: the class of a pair of
orderings of P and Q modulo reversing both at once, so one bit is enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadArity
from .linalg import permutation_parity


@dataclass(frozen=True)
class Letter:
    P: frozenset
    Q: frozenset
    exponent: int = 1
    twist: int | None = None

    @property
    def support(self) -> frozenset:
        return self.P | self.Q

    @property
    def k(self) -> int:
        return len(self.P) + len(self.Q)

    @property
    def generator(self) -> "Letter":
        return self if self.exponent == 1 else Letter(self.P, self.Q, 1, self.twist)

    def inverse(self) -> "Letter":
        return Letter(self.P, self.Q, -self.exponent, self.twist)

    def sort_key(self) -> tuple:
        return (tuple(sorted(self.P)), tuple(sorted(self.Q)), -1 if self.twist is None else self.twist, -self.exponent)

    def __str__(self) -> str:
        from .io import format_letter

        return format_letter(self)


def letter(P: Iterable[int], Q: Iterable[int], exponent: int = 1, twist: int | None = None) -> Letter:
    """Build a canonical letter; swapping P and Q negates the exponent."""
    P, Q = frozenset(P), frozenset(Q)
    if len(P) < 2 or len(Q) < 2:
        raise BadArity(f"both sides of a letter need at least 2 labels: {sorted(P)} | {sorted(Q)}")
    if P & Q:
        raise BadArity(f"letter sides overlap: {sorted(P & Q)}")
    if exponent not in (1, -1):
        raise BadArity("exponent must be +1 or -1")
    if min(P) > min(Q):
        P, Q, exponent = Q, P, -exponent
    return Letter(P, Q, exponent, twist)


def canonicalize(l: Letter) -> Letter:
    return letter(l.P, l.Q, l.exponent, l.twist)


def sequence_twist(P_seq: Sequence[int], Q_seq: Sequence[int], two_sets: bool = True) -> int:
    """Twist bit of a pair of orderings. With ``two_sets=False`` an ordering
    of a 2-element side is ignored (treated as unoriented)."""
    t = 0
    for s in (P_seq, Q_seq):
        if len(s) >= 3 or two_sets:
            t ^= permutation_parity(s)
    return t


def oriented_letter(P_seq, Q_seq, exponent: int = 1, two_sets: bool = True) -> Letter:
    return letter(P_seq, Q_seq, exponent, sequence_twist(P_seq, Q_seq, two_sets))


Word = tuple  # tuple of Letters


def word(letters: Iterable[Letter]) -> Word:
    return tuple(canonicalize(l) for l in letters)


def inverse_word(w: Sequence[Letter]) -> Word:
    return tuple(l.inverse() for l in reversed(w))


def free_reduce(w: Sequence[Letter]) -> Word:
    """Cancel adjacent x x^-1 pairs with a stack; one pass reaches the fixpoint."""
    out: list[Letter] = []
    for l in w:
        l = canonicalize(l)
        if out and out[-1] == l.inverse():
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def unoriented(w: Sequence[Letter]) -> Word:
    return tuple(Letter(l.P, l.Q, l.exponent, None) for l in w)


def cyclic_rotations(w: Sequence[Letter]):
    w = tuple(w)
    for r in range(max(len(w), 1)):
        yield w[r:] + w[:r]


def cyclically_equal(a: Sequence[Letter], b: Sequence[Letter], allow_inverse: bool = True) -> bool:
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        return False
    targets = [b, inverse_word(b)] if allow_inverse else [b]
    return any(rot == t for rot in cyclic_rotations(a) for t in targets)
