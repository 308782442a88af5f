"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``index -> coefficient``.  Rank uses fraction-free integer
elimination (each row is kept primitive by dividing out its content), kernels
use a sparse reduced echelon form over ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

Vector = Dict[Hashable, object]


def _integral(row: Vector) -> Dict[Hashable, int]:
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for c in row.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    out = {k: int(c * den) for k, c in row.items() if c}
    g = 0
    for c in out.values():
        g = gcd(g, c)
    if g > 1:
        out = {k: c // g for k, c in out.items()}
    return out


class Echelon:
    """Incremental fraction-free row echelon form.

    ``add(v)`` reduces ``v`` against the stored pivots and keeps it if it is
    independent.  Pivot columns are chosen as the smallest key of the reduced
    row (keys must be mutually comparable).
    """

    def __init__(self):
        self.pivots: Dict[Hashable, Dict[Hashable, int]] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Vector) -> Dict[Hashable, int]:
        row = _integral(v)
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                return row
            p, q = piv[col], row[col]
            g = gcd(p, q)
            a, b = p // g, q // g
            new = {k: a * c for k, c in row.items()}
            for k, c in piv.items():
                val = new.get(k, 0) - b * c
                if val:
                    new[k] = val
                else:
                    new.pop(k, None)
            row = _integral(new)
        return row

    def add(self, v: Vector) -> bool:
        row = self.reduce(v)
        if not row:
            return False
        col = min(row)
        if row[col] < 0:
            row = {k: -c for k, c in row.items()}
        self.pivots[col] = row
        return True

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)


def rank(rows: Iterable[Vector]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def kernel(columns: Sequence[Vector]) -> List[Dict[int, Fraction]]:
    """Basis of ``{x : sum_i x_i * columns[i] = 0}`` as sparse vectors over column indices.

    Gaussian elimination on the columns themselves, tracking the combination
    that produced each reduced column; a column that reduces to zero yields a
    kernel vector.
    """
    pivots: Dict[Hashable, Tuple[Dict[Hashable, Fraction], Dict[int, Fraction]]] = {}
    basis: List[Dict[int, Fraction]] = []
    for i, col in enumerate(columns):
        vec = {k: Fraction(c) for k, c in col.items() if c}
        combo: Dict[int, Fraction] = {i: Fraction(1)}
        while vec:
            key = min(vec)
            hit = pivots.get(key)
            if hit is None:
                break
            pvec, pcombo = hit
            factor = vec[key] / pvec[key]
            for k, c in pvec.items():
                val = vec.get(k, 0) - factor * c
                if val:
                    vec[k] = val
                else:
                    vec.pop(k, None)
            for k, c in pcombo.items():
                val = combo.get(k, 0) - factor * c
                if val:
                    combo[k] = val
                else:
                    combo.pop(k, None)
        if vec:
            pivots[min(vec)] = (vec, combo)
        else:
            basis.append(combo)
    return basis


def matrix_rank_from_columns(columns: Sequence[Vector]) -> int:
    return rank(columns)
