"""Sparse Gaussian elimination over the rationals.

Rows are dicts ``{column: Fraction}``; zero entries are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class Echelon:
    """Incrementally maintained row echelon form.

    Each stored row is normalised so that its leading (smallest) column has
    coefficient 1, and no two stored rows share a leading column.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            f = row[c]
            for cc, v in piv.items():
                nv = row.get(cc, 0) - f * v
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert ``row``; return True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        f = row[c]
        if f != 1:
            row = {cc: v / f for cc, v in row.items()}
        self.pivots[c] = row
        return True

    def rref(self) -> dict[int, dict[int, Fraction]]:
        """Fully reduced rows keyed by pivot column."""
        cols = sorted(self.pivots, reverse=True)
        done: dict[int, dict[int, Fraction]] = {}
        for c in cols:
            row = dict(self.pivots[c])
            for cc in [x for x in row if x != c and x in done]:
                f = row.get(cc)
                if not f:
                    continue
                for k, v in done[cc].items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            done[c] = row
        return done


def rank(rows: Iterable[dict]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows: Iterable[dict], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : r . x = 0 for every row r}`` as dense vectors."""
    ech = Echelon()
    for r in rows:
        ech.add(r)
    red = ech.rref()
    basis = []
    for f in range(ncols):
        if f in red:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for p, row in red.items():
            coeff = row.get(f)
            if coeff:
                v[p] = -coeff
        basis.append(v)
    return basis
