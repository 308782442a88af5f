"""Closed combinatorial descriptions of the differentials.

These expand ``d(T)`` vertex by vertex (splitting vertices, grafting black
leaves and roots) instead of going through generators.  They are an
independent cross-check of :mod:`hypertrees.differential`.

Each item may create a black vertex with fewer than two children; such terms
must cancel in the total, and :func:`expand` raises if they do not.

The new black vertex is filled first; the Koszul sign of moving it to its
canonical position is applied by :func:`canonicalize_oriented`.  When a black
vertex is split, the new one is the lower of the two.

Item signs.  For invalid blacks to cancel, splitting a white vertex with the
black above it and with the black below it must carry opposite signs.  With
that fixed, the five items on Greg trees give ``-d`` for ``d(x) = -g``, i.e.
``TREE_SIGNS`` below reproduce ``Greg_{-1}`` exactly, and the six items on
reduced forests give the part of ``dgComGreg``'s ``d`` that keeps the
partition into maximal subtrees (see :func:`hypertrees.differential.d_partition`).
``PRINTED_*`` are the sign lists with both white splits negative; they leave
uncancelled one-child blacks.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, Sequence, Tuple

from .forest import Forest, canonicalize_oriented, iter_vertices, mark_blacks
from .lincomb import LinComb, add_into
from .operad import positions

Terms = Dict[Forest, object]

NEW = -1  # mark of the created black vertex: first in the fill order

TREE_SIGNS = (1, -1, -1, -1, 1)
FOREST_SIGNS = (-1, 1, 1, -1, 1, -1)
PRINTED_TREE_SIGNS = (-1, -1, 1, 1, -1)
PRINTED_FOREST_SIGNS = (-1, -1, 1, -1, 1, -1)


class UncancelledTerm(AssertionError):
    pass


def _subsets(groups: Sequence[tuple], allowed) -> Iterable[Tuple[tuple, tuple]]:
    """Split ``groups`` into (moved, kept), moving only groups with ``allowed``."""
    idx = list(range(len(groups)))
    movable = [i for i in idx if allowed(groups[i])]
    for r in range(len(movable) + 1):
        for chosen in itertools.combinations(movable, r):
            moved = tuple(groups[i] for i in chosen)
            kept = tuple(groups[i] for i in idx if i not in chosen)
            yield moved, kept


def _raw_terms(marked: Forest, forest_mode: bool) -> List[Tuple[int, int, Forest]]:
    """``(item, sign index, raw marked forest)`` for every elementary move."""
    simple_only = (lambda g: len(g) == 1) if forest_mode else (lambda g: True)
    out = []
    for v, rebuild in positions(marked):
        label, groups = v
        if label > 0:
            for moved, kept in _subsets(groups, simple_only):
                above = (NEW, moved)
                out.append((1, 0, rebuild([(label, kept + ((above,),))])))
                below = (NEW, moved + (((label, kept),),))
                out.append((2, 1, rebuild([below])))
        else:
            for moved, kept in _subsets(groups, lambda g: True):
                top = (label, moved)
                out.append((3, 2, rebuild([(NEW, kept + ((top,),))])))
        leaf = (label, groups + (((NEW, ()),),))
        out.append((5 if forest_mode else 4, 4 if forest_mode else 3, rebuild([leaf])))
        if forest_mode:
            for gi, g in enumerate(groups):
                if len(g) > 1:
                    # any member, black or white, moves up onto a new black
                    for mi, m in enumerate(g):
                        ng = g[:mi] + ((NEW, ((m,),)),) + g[mi + 1 :]
                        new_v = (label, groups[:gi] + (ng,) + groups[gi + 1 :])
                        out.append((4, 3, rebuild([new_v])))
    if forest_mode:
        for idx, t in enumerate(marked):
            out.append((6, 5, marked[:idx] + ((NEW, ((t,),)),) + marked[idx + 1 :]))
    else:
        (root,) = marked
        out.append((5, 4, ((NEW, ((root,),)),)))
    return out


def _valid_blacks(f: Forest) -> bool:
    return all(len(v[1]) >= 2 for v in iter_vertices(f) if v[0] <= 0)


def expand(forest: Forest, forest_mode: bool, signs: Sequence[int] | None = None,
           strict: bool = True) -> Terms:
    """Sum of the itemized moves on ``forest``.

    ``forest_mode`` selects the six-item description on reduced forests (used
    for the height-graded differential) instead of the five-item one on Greg
    trees.  With ``strict`` a surviving invalid black vertex raises
    :class:`UncancelledTerm`; otherwise such terms are returned as they are.
    """
    if signs is None:
        signs = FOREST_SIGNS if forest_mode else TREE_SIGNS
    marked, _ = mark_blacks(forest, start=2)
    out: Terms = {}
    for _, si, raw in _raw_terms(marked, forest_mode):
        f, sign = canonicalize_oriented(raw)
        add_into(out, f, signs[si] * sign)
    bad = [f for f in out if not _valid_blacks(f)]
    if bad and strict:
        raise UncancelledTerm(f"invalid black vertices survive in d({forest}): {bad[:3]}")
    return out


def itemized_greg(forest: Forest, signs=None, strict: bool = True) -> LinComb:
    """Five-item description on a rooted Greg tree (equals ``Greg_{-1}``'s ``d``)."""
    return LinComb(expand(forest, False, signs, strict))


def itemized_d0(forest: Forest, signs=None, strict: bool = True) -> LinComb:
    """Six-item description on a reduced forest (equals :func:`d_partition`)."""
    return LinComb(expand(forest, True, signs, strict))
