"""GF(2) row reduction on Python ints used as bitsets (bit j = column j)."""

from __future__ import annotations

from typing import Iterable


class EchelonBasis:
    """Incremental echelon form keyed by leading bit.

    ``add`` reduces a row against the basis and keeps it if something is left.
    Two bases built from disjoint row streams can be merged with ``update``.
    """

    def __init__(self, rows: Iterable[int] = ()):
        self._pivots: dict[int, int] = {}
        self.update(rows)

    def reduce(self, row: int) -> int:
        pivots = self._pivots
        while row:
            lead = row.bit_length() - 1
            other = pivots.get(lead)
            if other is None:
                return row
            row ^= other
        return 0

    def add(self, row: int) -> bool:
        row = self.reduce(row)
        if row:
            self._pivots[row.bit_length() - 1] = row
            return True
        return False

    def update(self, rows: Iterable[int]) -> int:
        gained = 0
        for r in rows:
            gained += self.add(r)
        return gained

    def contains(self, row: int) -> bool:
        return self.reduce(row) == 0

    def copy(self) -> "EchelonBasis":
        new = EchelonBasis()
        new._pivots = dict(self._pivots)
        return new

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def rows(self) -> list[int]:
        return [self._pivots[k] for k in sorted(self._pivots, reverse=True)]

    def __len__(self) -> int:
        return len(self._pivots)


def rank(rows: Iterable[int]) -> int:
    return EchelonBasis(rows).rank


def bits(row: int) -> list[int]:
    out = []
    while row:
        low = row & -row
        out.append(low.bit_length() - 1)
        row ^= low
    return out
