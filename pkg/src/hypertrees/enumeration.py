"""Exhaustive generation of the five families, gradings and shapes."""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .forest import Family, Forest, Vertex, grading, is_reduced, labels

DEFAULT_MAX_ARITY = {
    Family.RT: 6,
    Family.GREG: 6,
    Family.FH: 6,
    Family.FG: 5,
    Family.FRG: 5,
}


class ArityTooLarge(ValueError):
    pass


class NotReduced(ValueError):
    pass


def set_partitions(items: Sequence[int]) -> Iterator[List[Tuple[int, ...]]]:
    """All set partitions, blocks in order of their smallest element."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k in range(len(rest) + 1):
        for companions in itertools.combinations(rest, k):
            remaining = [x for x in rest if x not in companions]
            for tail in set_partitions(remaining):
                yield [(first, *companions)] + tail


def _check_arity(family: Family, n: int, max_arity: Optional[int]) -> None:
    if n < 1:
        raise ValueError("arity must be at least 1")
    cap = DEFAULT_MAX_ARITY[family] if max_arity is None else max_arity
    if n > cap:
        raise ArityTooLarge(f"{family.value}({n}) exceeds the arity cap {cap}")


# Generation works on sorted label tuples; results are canonical because the
# pieces of a set partition carry pairwise distinct label sets.


@lru_cache(maxsize=None)
def _trees(family: Family, labs: Tuple[int, ...]) -> Tuple[Vertex, ...]:
    out: List[Vertex] = []
    hyper = family in (Family.FH, Family.FG, Family.FRG)
    blacks = family in (Family.GREG, Family.FG, Family.FRG)
    for r in labs:
        rest = tuple(x for x in labs if x != r)
        for blocks in set_partitions(rest):
            choices = [_groups(family, b, hyper) for b in blocks]
            for groups in itertools.product(*choices):
                out.append((r, tuple(sorted(groups))))
    if blacks and len(labs) >= 2:
        black_hyper = family is Family.FG
        for blocks in set_partitions(labs):
            if len(blocks) < 2:
                continue
            choices = [_groups(family, b, black_hyper) for b in blocks]
            for groups in itertools.product(*choices):
                out.append((0, tuple(sorted(groups))))
    return tuple(sorted(out))


def _groups(family: Family, block: Tuple[int, ...], hyper: bool) -> Tuple[tuple, ...]:
    """Possible groups (one edge) whose members carry exactly ``block``."""
    if hyper:
        return _forests(family, block)
    return tuple((t,) for t in _trees(family, block))


@lru_cache(maxsize=None)
def _forests(family: Family, labs: Tuple[int, ...]) -> Tuple[Forest, ...]:
    out = []
    for blocks in set_partitions(labs):
        for roots in itertools.product(*(_trees(family, b) for b in blocks)):
            out.append(tuple(sorted(roots)))
    return tuple(sorted(out))


def enumerate_family(
    family,
    n: int,
    max_j: Optional[int] = None,
    max_k: Optional[int] = None,
    max_arity: Optional[int] = None,
) -> List[Forest]:
    """All canonical forests of ``family`` on ``1..n``, each exactly once.

    ``max_j``/``max_k`` bound the hypertree and Greg weights.
    """
    family = Family.parse(family)
    _check_arity(family, n, max_arity)
    labs = tuple(range(1, n + 1))
    if family in (Family.RT, Family.GREG):
        items = [(t,) for t in _trees(family, labs)]
    else:
        items = list(_forests(family, labs))
    if max_j is not None or max_k is not None:
        def keep(f):
            _, j, k = grading(f)
            return (max_j is None or j <= max_j) and (max_k is None or k <= max_k)

        items = [f for f in items if keep(f)]
    return items


def count_bigraded(family, n: int, max_arity: Optional[int] = None) -> Dict[Tuple[int, int, int], int]:
    """``{(n, j, k): count}`` over ``enumerate_family(family, n)``."""
    return dict(sorted(Counter(grading(f) for f in enumerate_family(family, n, max_arity=max_arity)).items()))


def marginal(table: Dict[Tuple[int, int, int], int], axis: str) -> Dict[int, int]:
    """Sum a bigraded table over one weight: ``axis`` is ``"j"`` or ``"k"`` (the kept one)."""
    out: Dict[int, int] = {}
    for (_, j, k), c in table.items():
        key = j if axis == "j" else k
        out[key] = out.get(key, 0) + c
    return dict(sorted(out.items()))


# --- shapes ------------------------------------------------------------------------------


def _component(v: Vertex, subtrees: List[Forest]):
    """Split off the simple-edge component rooted at ``v``.

    Returns the component as a tree and the hyperedges hanging on its white
    vertices, already converted to shape groups.
    """
    hang: Dict[int, List[tuple]] = {}

    def walk(u):
        label, groups = u
        kept = []
        for g in groups:
            if len(g) == 1:
                kept.append((walk(g[0]),))
            else:
                hang.setdefault(label, []).append(tuple(sorted(_shape_of(m, subtrees) for m in g)))
        return (label, tuple(sorted(kept)))

    return walk(v), hang


def _shape_of(v: Vertex, subtrees: List[Forest]) -> Vertex:
    tree, hang = _component(v, subtrees)
    subtrees.append((tree,))
    leaves = labels((tree,))
    return (0, tuple(sorted(((w, tuple(sorted(hang.get(w, [])))),) for w in leaves)))


def shape_decompose(f: Forest) -> Tuple[Forest, List[Forest]]:
    """Shape of a reduced forest and its maximal subtrees (sorted by smallest label).

    Maximal subtrees are the components for the simple edges.  In the shape
    each of them becomes a black vertex with one simple edge per white vertex;
    hyperedges hang on the same white vertices as before and connect to the
    black roots of the components above them.
    """
    if not is_reduced(f):
        raise NotReduced(f"{f} has a hyperedge above a black vertex")
    subtrees: List[Forest] = []
    shape = tuple(sorted(_shape_of(r, subtrees) for r in f))
    subtrees.sort(key=lambda t: labels(t)[0])
    return shape, subtrees


def shape_reconstruct(shape: Forest, subtrees: Sequence[Forest]) -> Forest:
    """Inverse of :func:`shape_decompose`."""
    by_labels = {tuple(labels(t)): t[0] for t in subtrees}

    def rebuild(corolla: Vertex) -> Vertex:
        _, leaves = corolla
        hang = {}
        for (leaf,) in leaves:
            w, groups = leaf
            hang[w] = [tuple(sorted(rebuild(m) for m in g)) for g in groups]
        key = tuple(sorted(hang))
        if key not in by_labels:
            raise ValueError(f"no subtree on labels {key}")

        def graft(u):
            label, groups = u
            new = [tuple(graft(m) for m in g) for g in groups]
            if label > 0:
                new.extend(hang.get(label, []))
            return (label, tuple(sorted(tuple(sorted(g)) for g in new)))

        return graft(by_labels[key])

    return tuple(sorted(rebuild(r) for r in shape))


def shape_partition(shape: Forest) -> Tuple[Tuple[int, ...], ...]:
    """The set partition of the white labels into maximal subtrees."""
    blocks = []

    def walk(corolla):
        block = []
        for (leaf,) in corolla[1]:
            block.append(leaf[0])
            for g in leaf[1]:
                for m in g:
                    walk(m)
        blocks.append(tuple(sorted(block)))

    for r in shape:
        walk(r)
    return tuple(sorted(blocks))


def shapes(n: int, family=Family.FRG, trees_only: bool = False) -> List[Forest]:
    """Distinct shapes of ``family(n)`` (FH or FRG give the same set)."""
    found = set()
    for f in enumerate_family(family, n):
        if trees_only and len(f) != 1:
            continue
        found.add(shape_decompose(f)[0])
    return sorted(found)
