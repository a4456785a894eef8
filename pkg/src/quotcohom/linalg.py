"""Exact linear algebra on sparse integer vectors.

Vectors are dicts ``key -> int``.  Elimination is fraction-free: a row is
reduced by ``row = p*row - a*pivot_row`` and then divided by its content, so
every intermediate stays an integer.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence

Vector = Dict[Hashable, int]


def _primitive(row: Vector) -> Vector:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


class Echelon:
    """Incrementally maintained row echelon form over Q (integer rows)."""

    def __init__(self):
        self.pivots: Dict[Hashable, Vector] = {}

    def reduce(self, vec: Mapping[Hashable, int]) -> Vector:
        row = {k: int(v) for k, v in vec.items() if v}
        changed = True
        while changed and row:
            changed = False
            for key in sorted(row, key=repr):
                piv = self.pivots.get(key)
                if piv is None:
                    continue
                a, p = row[key], piv[key]
                out = {k: p * v for k, v in row.items()}
                for k, v in piv.items():
                    nv = out.get(k, 0) - a * v
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
                row = _primitive(out)
                changed = True
                break
        return row

    def add(self, vec: Mapping[Hashable, int]) -> bool:
        """Insert ``vec``; return True if it was independent of the rows so far."""
        row = self.reduce(vec)
        if not row:
            return False
        key = min(row, key=repr)
        self.pivots[key] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(vectors: Iterable[Mapping[Hashable, int]]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def solve(basis: Sequence[Mapping[Hashable, int]], target: Mapping[Hashable, int]) -> Optional[List[Fraction]]:
    """Coordinates of ``target`` in the span of ``basis``; None if outside it.

    Raises ValueError if ``basis`` is linearly dependent.
    """
    n = len(basis)
    rows = []
    # augmented rows: vector part + coordinate part tagged with ("#", i)
    for i, b in enumerate(basis):
        row = {("v", k): Fraction(v) for k, v in b.items() if v}
        row[("#", i)] = Fraction(1)
        rows.append(row)
    pivots: Dict[Hashable, dict] = {}
    for row in rows:
        row = _reduce_frac(row, pivots)
        key = _first_vector_key(row)
        if key is None:
            raise ValueError("basis vectors are linearly dependent")
        pivots[key] = row
    t = {("v", k): Fraction(v) for k, v in target.items() if v}
    t = _reduce_frac(t, pivots)
    if _first_vector_key(t) is not None:
        return None
    return [-t.get(("#", i), Fraction(0)) for i in range(n)]


def _first_vector_key(row):
    keys = [k for k in row if k[0] == "v"]
    return min(keys, key=repr) if keys else None


def _reduce_frac(row, pivots):
    row = dict(row)
    while True:
        hit = None
        for k in sorted((k for k in row if k[0] == "v"), key=repr):
            if k in pivots:
                hit = k
                break
        if hit is None:
            return row
        piv = pivots[hit]
        f = row[hit] / piv[hit]
        for k, v in piv.items():
            nv = row.get(k, 0) - f * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
