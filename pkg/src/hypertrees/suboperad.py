"""Spans of suboperads generated by binary operations."""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Sequence

from .forest import Family
from .lincomb import LinComb
from .linalg import Echelon
from .operad import UNIT, act_terms, compose_lin


class ArityTooLarge(ValueError):
    pass


MAX_ARITY = 6


def _sn_generators(n: int) -> List[tuple]:
    """A transposition and an n-cycle, which generate the symmetric group."""
    if n < 2:
        return []
    swap = (2, 1) + tuple(range(3, n + 1))
    cycle = tuple(range(2, n + 1)) + (1,)
    return [swap, cycle] if n > 2 else [swap]


def closure_bases(generators: Sequence[LinComb], max_n: int, family=Family.FH) -> Dict[int, List[LinComb]]:
    """Bases of the generated suboperad in arities ``1..max_n``.

    Arity ``n`` is spanned by ``u o_i g`` for ``u`` in arity ``n-1`` and
    ``g`` a generator (any tree of binary operations is grown leaf by leaf),
    then closed under the symmetric group.
    """
    if max_n > MAX_ARITY:
        raise ArityTooLarge(f"suboperad closure is capped at arity {MAX_ARITY}")
    family = Family.parse(family)
    bases: Dict[int, List[LinComb]] = {1: [LinComb.of(UNIT)]}
    for n in range(2, max_n + 1):
        ech = Echelon()
        basis: List[LinComb] = []
        queue: deque = deque()

        def offer(v: LinComb):
            if v and ech.add(dict(v.items())):
                basis.append(v)
                queue.append(v)

        if n == 2:
            for g in generators:
                offer(g)
        else:
            for u in bases[n - 1]:
                for i in range(1, n):
                    for g in generators:
                        offer(compose_lin(u, i, g, family))
        perms = _sn_generators(n)
        while queue:
            v = queue.popleft()
            for sigma in perms:
                offer(LinComb(act_terms(sigma, v)))
        bases[n] = basis
    return bases


def suboperad_dims(generators: Sequence[LinComb], max_n: int, family=Family.FH) -> List[int]:
    """Dimensions of the generated suboperad in arities ``1..max_n``."""
    bases = closure_bases(generators, max_n, family)
    return [len(bases[n]) for n in range(1, max_n + 1)]
