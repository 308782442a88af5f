"""Cochain complexes of the dg operads, their Betti numbers and H^0."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .differential import Convention, get_differential
from .enumeration import enumerate_family
from .forest import Family, Forest, format_forest, greg_weight
from .lincomb import LinComb
from .linalg import kernel, rank


@dataclass
class CochainComplex:
    """``C^k`` = forests of arity ``n`` with ``k`` black vertices, ``d: C^k -> C^{k+1}``.

    ``matrices[k]`` is stored column-wise: column ``i`` is ``d(bases[k][i])``
    written in the row indices of ``bases[k+1]``.
    """

    n: int
    convention: Convention
    bases: List[List[Forest]]
    matrices: List[List[Dict[int, object]]] = field(default_factory=list)
    _ranks: Dict[int, int] = field(default_factory=dict)

    @classmethod
    def build(cls, n: int, convention="dgComGreg", max_arity: Optional[int] = None) -> "CochainComplex":
        conv = Convention.parse(convention)
        forests = enumerate_family(conv.family, n, max_arity=max_arity)
        top = max(greg_weight(f) for f in forests)
        bases: List[List[Forest]] = [[] for _ in range(top + 1)]
        for f in forests:
            bases[greg_weight(f)].append(f)
        d = get_differential(conv)
        index = [{f: i for i, f in enumerate(b)} for b in bases]
        matrices = []
        for k in range(top + 1):
            cols = []
            for f in bases[k]:
                col = {}
                for g, c in d(f).items():
                    if k + 1 > top or g not in index[k + 1]:
                        raise AssertionError(f"d({f}) leaves the complex: {g}")
                    col[index[k + 1][g]] = c
                cols.append(col)
            matrices.append(cols)
        return cls(n, conv, bases, matrices)

    @property
    def dims(self) -> List[int]:
        return [len(b) for b in self.bases]

    def rank(self, k: int) -> int:
        if k < 0 or k >= len(self.matrices):
            return 0
        if k not in self._ranks:
            self._ranks[k] = rank(self.matrices[k])
        return self._ranks[k]

    def betti(self) -> List[int]:
        return [self.dims[k] - self.rank(k) - self.rank(k - 1) for k in range(len(self.bases))]

    def euler_char(self) -> int:
        return sum((-1) ** k * dim for k, dim in enumerate(self.dims))

    def check_d_squared(self) -> bool:
        for k in range(len(self.matrices) - 1):
            for col in self.matrices[k]:
                acc: Dict[int, object] = {}
                for j, c in col.items():
                    for r, c2 in self.matrices[k + 1][j].items():
                        acc[r] = acc.get(r, 0) + c * c2
                if any(acc.values()):
                    return False
        return True

    def h0_basis(self) -> List[LinComb]:
        """A basis of ``ker(d: C^0 -> C^1)`` as combinations of forests."""
        vectors = kernel(self.matrices[0])
        basis = self.bases[0]
        return [LinComb({basis[i]: c for i, c in v.items()}) for v in vectors]

    def dump_matrices(self, directory) -> List[Path]:
        """Write each ``d^k`` as a sparse JSON file (basis in text notation plus entries)."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        written = []
        for k, cols in enumerate(self.matrices):
            if k + 1 >= len(self.bases):
                break
            payload = {
                "arity": self.n,
                "convention": self.convention.value,
                "source_degree": k,
                "shape": [len(self.bases[k + 1]), len(self.bases[k])],
                "source_basis": [format_forest(f) for f in self.bases[k]],
                "target_basis": [format_forest(f) for f in self.bases[k + 1]],
                "entries": [[r, c, *_num_den(v)] for c, col in enumerate(cols) for r, v in sorted(col.items())],
            }
            path = directory / f"d_{self.convention.value}_n{self.n}_k{k}.json"
            path.write_text(json.dumps(payload))
            written.append(path)
        return written


def _num_den(v):
    v = Fraction(v)
    return v.numerator, v.denominator


_COMPLEXES: Dict[Tuple[int, Convention], CochainComplex] = {}


def complex_for(n: int, convention="dgComGreg") -> CochainComplex:
    key = (n, Convention.parse(convention))
    if key not in _COMPLEXES:
        _COMPLEXES[key] = CochainComplex.build(n, key[1])
    return _COMPLEXES[key]


def betti(n: int, convention="dgComGreg") -> List[int]:
    """Betti numbers ``[b_0, b_1, ...]`` of the arity ``n`` component."""
    return complex_for(n, convention).betti()


def euler_char(n: int, convention="dgComGreg") -> int:
    return complex_for(n, convention).euler_char()


def h0_basis(n: int, convention="dgComGreg") -> List[LinComb]:
    return complex_for(n, convention).h0_basis()
