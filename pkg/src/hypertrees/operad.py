"""Insertion compositions, symmetric group action and the reduction rewriting.

Every operad of the package lives on canonical forests:

========  ==========================  =======================
family    operad                      composition
========  ==========================  =======================
RT        PreLie                      :func:`insert`
Greg      Greg                        :func:`insert`
FH        ComPreLie                   :func:`insert`
FG        ComGreg                     :func:`insert`
FRG       RedComGreg                  :func:`compose_reduced`
========  ==========================  =======================

With ``graded=True`` black vertices are odd: a basis element is a forest with
its black vertices in canonical pre-order, and compositions put the blacks of
the outer forest before those of the inner one.  This is the sign convention
of the dg operads ``Greg_{-1}`` and ``dgComGreg``.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from .forest import (
    Family,
    Forest,
    Vertex,
    arity,
    belongs_to,
    canonicalize,
    canonicalize_oriented,
    greg_weight,
    height,
    iter_vertices,
    labels,
    mark_blacks,
    parse_forest,
    relabel,
    relabel_canonical,
)
from .lincomb import LinComb, add_into

Terms = Dict[Forest, object]


class LabelNotFound(KeyError):
    pass


class LabelIsBlack(ValueError):
    pass


class FamilyMismatch(ValueError):
    pass


# --- positions ------------------------------------------------------------------

Rebuild = Callable[[Sequence[Vertex]], Forest]


def positions(forest: Forest) -> Iterator[Tuple[Vertex, Rebuild]]:
    """Every vertex with a function replacing it by a list of vertices.

    The replacement vertices join the group the vertex belonged to, or become
    roots if the vertex was a root.  Vertices come in canonical pre-order.
    """
    for idx, root in enumerate(forest):

        def top(new, idx=idx):
            return forest[:idx] + tuple(new) + forest[idx + 1 :]

        yield from _positions_in(root, top)


def _positions_in(v: Vertex, rebuild_self: Rebuild):
    yield v, rebuild_self
    label, groups = v
    for gi, g in enumerate(groups):
        for mi, m in enumerate(g):

            def rebuild_member(new, gi=gi, mi=mi, g=g):
                ng = g[:mi] + tuple(new) + g[mi + 1 :]
                return rebuild_self([(label, groups[:gi] + (ng,) + groups[gi + 1 :])])

            yield from _positions_in(m, rebuild_member)


def find_label(forest: Forest, label: int) -> Tuple[Vertex, Rebuild]:
    if label <= 0:
        raise LabelIsBlack(f"cannot compose at a black vertex ({label})")
    for v, rebuild in positions(forest):
        if v[0] == label:
            return v, rebuild
    raise LabelNotFound(label)


def _attach(forest: Forest, extras: Dict[int, List[tuple]]) -> Forest:
    """Add groups to the vertices with the given pre-order indices."""
    counter = itertools.count()

    def walk(v):
        idx = next(counter)
        label, groups = v
        new_groups = tuple(tuple(walk(m) for m in g) for g in groups)
        return (label, new_groups + tuple(extras.get(idx, ())))

    return tuple(walk(r) for r in forest)


def _vertex_count(forest: Forest) -> int:
    return sum(1 for _ in iter_vertices(forest))


# --- insertion ----------------------------------------------------------------------


def insert_terms(S: Forest, i: int, T: Forest, graded: bool = False) -> Terms:
    """``S o_i T`` on disjoint label sets, as a dict of canonical forests.

    Each child group of the vertex ``i`` is grafted, as one edge, on some vertex
    (black or white) of ``T``; then ``T`` takes the place of ``i``: its roots
    join the edge that connected ``i`` to its parent, or become roots of the
    forest if ``i`` was a root.
    """
    if graded:
        S, nxt = mark_blacks(S, 1)
        T, _ = mark_blacks(T, nxt)
    v, rebuild = find_label(S, i)
    child_groups = v[1]
    nv = _vertex_count(T)
    out: Terms = {}
    for choice in itertools.product(range(nv), repeat=len(child_groups)):
        extras: Dict[int, List[tuple]] = {}
        for g, target in zip(child_groups, choice):
            extras.setdefault(target, []).append(g)
        grafted = _attach(T, extras)
        raw = rebuild(list(grafted))
        if graded:
            f, sign = canonicalize_oriented(raw)
            add_into(out, f, sign)
        else:
            add_into(out, canonicalize(raw), 1)
    return out


def insert(S: Forest, i: int, T: Forest, family=Family.FG, graded: bool = False) -> LinComb:
    """Partial composition on disjoint label sets, checked against ``family``."""
    family = Family.parse(family)
    if family is Family.FRG:
        return LinComb(compose_terms_reduced(S, i, T, graded))
    for f in (S, T):
        if not belongs_to(f, family):
            raise FamilyMismatch(f"{f} is not in {family.value}")
    if (set(labels(S)) - {i}) & set(labels(T)):
        raise ValueError("insert needs T disjoint from the other labels of S; use compose()")
    return LinComb(insert_terms(S, i, T, graded))


def _standard_pieces(S: Forest, i: int, T: Forest, graded: bool):
    """Relabel ``S`` and ``T`` for the standard operadic convention.

    Labels of ``T`` are shifted to ``i .. i+m-1`` and labels of ``S`` above ``i``
    are shifted up by ``m-1``.  Returns the relabelled pieces, the placeholder
    label for ``i`` and the sign of the relabelling.
    """
    n = arity(S)
    m = arity(T)
    if not 1 <= i <= n:
        raise LabelNotFound(i)
    placeholder = n + m + 1
    smap = {j: (j if j < i else j + m - 1) for j in range(1, n + 1)}
    smap[i] = placeholder
    S2, sign = relabel_canonical(S, smap, graded)
    T2 = relabel(T, {k: k + i - 1 for k in range(1, m + 1)})  # order preserving
    return S2, placeholder, T2, sign


def compose_terms(S: Forest, i: int, T: Forest, graded: bool = False) -> Terms:
    """``S o_i T`` with both on standard labels ``1..n`` and ``1..m``."""
    S2, placeholder, T2, sign = _standard_pieces(S, i, T, graded)
    out = insert_terms(S2, placeholder, T2, graded)
    if sign != 1:
        out = {f: sign * c for f, c in out.items()}
    return out


def compose(S: Forest, i: int, T: Forest, family=Family.FG, graded: bool = False) -> LinComb:
    """Standard partial composition ``S o_i T`` in the operad of ``family``."""
    family = Family.parse(family)
    if family is Family.FRG:
        return compose_reduced(S, i, T, graded)
    for f in (S, T):
        if not belongs_to(f, family):
            raise FamilyMismatch(f"{f} is not in {family.value}")
    return LinComb(compose_terms(S, i, T, graded))


def compose_lin(a: LinComb | Terms, i: int, b: LinComb | Terms, family=Family.FG, graded: bool = False) -> LinComb:
    """Bilinear extension of :func:`compose` (with reduction for FRG)."""
    family = Family.parse(family)
    a_items = a.items() if isinstance(a, (LinComb, dict)) else a
    b_items = list(b.items())
    out: Terms = {}
    for s, cs in a_items:
        for t, ct in b_items:
            terms = compose_terms(s, i, t, graded)
            if family is Family.FRG:
                terms = reduce_terms(terms, graded)
            for f, c in terms.items():
                add_into(out, f, cs * ct * c)
    return LinComb(out)


# --- symmetric group ---------------------------------------------------------------


def perm_from_cycles(cycles: Sequence[Sequence[int]], n: int) -> Tuple[int, ...]:
    """One-line notation (``p[k-1]`` is the image of ``k``) from disjoint cycles."""
    img = list(range(1, n + 1))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a - 1] = b
    return tuple(img)


def act_terms(sigma: Sequence[int], terms, graded: bool = False) -> Terms:
    """Relabel every white vertex ``k`` as ``sigma[k-1]``."""
    mapping = {k + 1: s for k, s in enumerate(sigma)}
    out: Terms = {}
    items = terms.items()
    for f, c in items:
        g, sign = relabel_canonical(f, mapping, graded)
        add_into(out, g, sign * c)
    return out


def act(sigma: Sequence[int], v, graded: bool = False) -> LinComb:
    """Right action of a permutation (one-line notation) on a forest or LinComb."""
    if isinstance(v, tuple):
        v = LinComb.of(v)
    return LinComb(act_terms(sigma, v, graded))


# --- reduction -----------------------------------------------------------------------


def redexes(forest: Forest) -> List[Tuple[Vertex, int, Rebuild]]:
    """Black vertices carrying a hyperedge: ``(vertex, group index, rebuild)``."""
    out = []
    for v, rebuild in positions(forest):
        if v[0] <= 0:
            for gi, g in enumerate(v[1]):
                if len(g) > 1:
                    out.append((v, gi, rebuild))
    return out


def rewrite_step(v: Vertex, gi: int, rebuild: Rebuild) -> List[Forest]:
    """Apply the reduction rule at one redex; returns the raw (uncanonical) terms.

    The hyperedge ``{m_1..m_k}`` above the black vertex is replaced, for each
    ``j``, by the simple edge to ``m_j``; the other members move down to the
    edge that holds the black vertex (or become roots).
    """
    label, groups = v
    g = groups[gi]
    out = []
    for j, member in enumerate(g):
        new_black = (label, groups[:gi] + ((member,),) + groups[gi + 1 :])
        others = g[:j] + g[j + 1 :]
        out.append(rebuild([new_black, *others]))
    return out


_NF_CACHE: Dict[Tuple[Forest, bool], Terms] = {}


def normal_form(forest: Forest, graded: bool = False) -> Terms:
    """Reduced normal form of a canonical forest (innermost rewriting, memoized)."""
    key = (forest, graded)
    hit = _NF_CACHE.get(key)
    if hit is not None:
        return hit
    found = redexes(mark_blacks(forest)[0] if graded else forest)
    if not found:
        out = {forest: 1}
    else:
        v, gi, rebuild = found[-1]  # last in pre-order has no redex above it
        out = {}
        for raw in rewrite_step(v, gi, rebuild):
            if graded:
                f, sign = canonicalize_oriented(raw)
            else:
                f, sign = canonicalize(raw), 1
            for h, c in normal_form(f, graded).items():
                add_into(out, h, sign * c)
    _NF_CACHE[key] = out
    return out


def reduce_terms(terms, graded: bool = False) -> Terms:
    out: Terms = {}
    for f, c in terms.items():
        if not f or greg_weight(f) == 0:
            add_into(out, f, c)
            continue
        for h, ch in normal_form(f, graded).items():
            add_into(out, h, c * ch)
    return out


def reduce(v, graded: bool = False) -> LinComb:
    """Project a combination of FG forests to its FRG normal form."""
    if isinstance(v, tuple):
        v = LinComb.of(v)
    return LinComb(reduce_terms(v, graded))


def reduce_with_strategy(forest: Forest, strategy: str = "innermost", rng: random.Random | None = None,
                         graded: bool = False, trace: list | None = None) -> Terms:
    """Unmemoized reduction with an explicit redex choice, for confluence checks.

    ``strategy`` is ``"innermost"``, ``"outermost"`` or ``"random"``.  When
    ``trace`` is a list, ``(height_before, height_after)`` is appended for every
    rewriting step.
    """
    rng = rng or random.Random(0)
    marked = mark_blacks(forest)[0] if graded else forest
    found = redexes(marked)
    if not found:
        return {forest: 1}
    if strategy == "innermost":
        pick = found[-1]
    elif strategy == "outermost":
        pick = found[0]
    elif strategy == "random":
        pick = rng.choice(found)
    else:
        raise ValueError(strategy)
    h0 = height(forest)
    out: Terms = {}
    for raw in rewrite_step(*pick):
        if graded:
            f, sign = canonicalize_oriented(raw)
        else:
            f, sign = canonicalize(raw), 1
        if trace is not None:
            trace.append((h0, height(f)))
        for h, c in reduce_with_strategy(f, strategy, rng, graded, trace).items():
            add_into(out, h, sign * c)
    return out


def compose_terms_reduced(S: Forest, i: int, T: Forest, graded: bool = False) -> Terms:
    return reduce_terms(compose_terms(S, i, T, graded), graded)


def compose_reduced(S: Forest, i: int, T: Forest, graded: bool = False) -> LinComb:
    """Composition of RedComGreg: ``reduce(S o_i T)`` for reduced ``S`` and ``T``."""
    for f in (S, T):
        if not belongs_to(f, Family.FRG):
            raise FamilyMismatch(f"{f} is not a reduced forest")
    return LinComb(compose_terms_reduced(S, i, T, graded))


# --- generators ------------------------------------------------------------------------

X = parse_forest("1<2>")
Y = parse_forest("2<1>")
C = parse_forest("{1,2}")
G = parse_forest("B<1><2>")
UNIT = parse_forest("1")


def generator(symbol: str) -> LinComb:
    """``x``, ``y``, ``c``, ``g`` or the Lie bracket ``l = x - y``."""
    table = {"x": X, "y": Y, "c": C, "g": G}
    if symbol == "l":
        return LinComb({X: 1, Y: -1})
    if symbol not in table:
        raise KeyError(symbol)
    return LinComb.of(table[symbol])


def corolla_x(n: int) -> Forest:
    """White root 1 with simple edges to ``2..n``."""
    return canonicalize([(1, tuple(((k, ()),) for k in range(2, n + 1)))])


def corolla_g(n: int) -> Forest:
    """Black root with simple edges to ``1..n``."""
    return canonicalize([(0, tuple(((k, ()),) for k in range(1, n + 1)))])


def corolla_c(n: int) -> Forest:
    """The forest of ``n`` single vertices."""
    return canonicalize([(k, ()) for k in range(1, n + 1)])


def corolla_h(n: int) -> Forest:
    """White root 1 with one hyperedge to ``2..n``."""
    return canonicalize([(1, (tuple((k, ()) for k in range(2, n + 1)),))])


def corolla_p(partition: Sequence[Sequence[int]]) -> Forest:
    """White root 1 with one edge per block of a partition of ``2..n``."""
    return canonicalize([(1, tuple(tuple((k, ()) for k in block) for block in partition))])
