"""Differentials of ``Greg_{-1}`` and ``dgComGreg``.

Both are derivations of a graded operad (black vertices odd), so they are
determined by their values on generators:

* ``Greg_{-1}`` on rooted Greg trees: ``d(x) = d(y) = -g``;
* ``dgComGreg`` on reduced forests: ``d(x) = d(y) = g`` and ``d(c) = 0``.

:func:`differential` evaluates the derivation by writing each forest as a
single-term composition of smaller forests (or, for a corolla, as a
composition minus smaller terms) and applying the signed Leibniz rule

    d(S o_i T) = d(S) o_i T + (-1)^{|S|} S o_i d(T).

The closed combinatorial descriptions live in :mod:`hypertrees.descriptions`
and are compared against this recursion in the test suite.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Dict, Tuple

from .forest import (
    Family,
    Forest,
    belongs_to,
    canonicalize,
    greg_weight,
    height,
    labels,
)
from .lincomb import LinComb, add_into
from .operad import FamilyMismatch, insert_terms, reduce_terms

Terms = Dict[Forest, object]


class Convention(str, enum.Enum):
    GREG = "Greg-1"
    DGCOMGREG = "dgComGreg"

    @classmethod
    def parse(cls, value) -> "Convention":
        if isinstance(value, cls):
            return value
        key = str(value).replace("₋₁", "-1").replace("_", "").lower()
        for c in cls:
            if c.value.replace("_", "").lower() == key:
                return c
        aliases = {"greg": cls.GREG, "greg-1": cls.GREG, "gregm1": cls.GREG,
                   "comgreg": cls.DGCOMGREG, "dg": cls.DGCOMGREG}
        if key in aliases:
            return aliases[key]
        raise ValueError(f"unknown convention {value!r}")

    @property
    def family(self) -> Family:
        return Family.GREG if self is Convention.GREG else Family.FRG

    @property
    def x_coefficient(self) -> int:
        return -1 if self is Convention.GREG else 1


def _compose(S: Forest, a: int, T: Forest, conv: Convention) -> Terms:
    terms = insert_terms(S, a, T, graded=True)
    if conv is Convention.DGCOMGREG:
        terms = reduce_terms(terms, graded=True)
    return terms


def _compose_lin(s_terms: Terms, a: int, t_terms: Terms, conv: Convention) -> Terms:
    out: Terms = {}
    for s, cs in s_terms.items():
        for t, ct in t_terms.items():
            for f, c in _compose(s, a, t, conv).items():
                add_into(out, f, cs * ct * c)
    return out


def _leaf(label: int):
    return (label, ())


def _replace_group(v, gi, new_group):
    label, groups = v
    return (label, groups[:gi] + (new_group,) + groups[gi + 1 :])


def split(f: Forest):
    """A decomposition ``f = S o_a T`` (single term) or a corolla marker.

    Returns ``("comp", S, a, T)`` when ``f`` is the unique term of the
    composition, ``("corolla", S, a, T)`` when ``f`` is one term of a larger
    sum, or ``("base", None, None, None)`` for generators and the unit.
    """
    fresh = max(labels(f)) + 1
    if len(f) >= 2:
        for idx, t in enumerate(f):
            if t[1]:
                S = tuple(sorted(f[:idx] + (_leaf(fresh),) + f[idx + 1 :]))
                return "comp", S, fresh, (t,)
        if len(f) == 2:
            return "base", None, None, None
        # a forest of single vertices: {a, l} o_a {the others}
        first = f[0]
        S = tuple(sorted((first, _leaf(fresh))))
        return "comp", S, fresh, f[1:]
    (root,) = f
    # any hyperedge, or any simple edge to a non-leaf, is split off
    hit = _split_tree(root, fresh)
    if hit is not None:
        new_root, T = hit
        return "comp", canonicalize([new_root]), fresh, T
    label, groups = root
    if label > 0:
        if len(groups) <= 1:
            return "base", None, None, None
        # root r with leaves l_1 < ... < l_m: (a<l_1>..<l_{m-1}>) o_a (r<l_m>)
        *rest, last = groups
        S = ((fresh, tuple(rest)),)
        T = ((label, (last,)),)
        return "corolla", S, fresh, T
    if len(groups) <= 2:
        return "base", None, None, None
    # black root with leaves: (a<l_m>) o_a (B<l_1>..<l_{m-1}>)
    *rest, last = groups
    S = ((fresh, (last,)),)
    T = ((0, tuple(rest)),)
    return "corolla", S, fresh, T


def _split_tree(v, fresh):
    """Replace the first hyperedge or non-leaf simple child by a fresh leaf."""
    label, groups = v
    for gi, g in enumerate(groups):
        if len(g) > 1:
            return _replace_group(v, gi, (_leaf(fresh),)), tuple(g)
        (m,) = g
        if m[1]:
            return _replace_group(v, gi, (_leaf(fresh),)), (m,)
    return None


class Differential:
    """Memoized derivation for one convention."""

    def __init__(self, convention):
        self.conv = Convention.parse(convention)
        self.cache: Dict[Forest, Terms] = {}

    def base(self, f: Forest) -> Terms:
        if len(f) == 1:
            label, groups = f[0]
            if label > 0 and len(groups) == 1 and not groups[0][0][1]:
                child = groups[0][0][0]
                g = ((0, tuple(sorted((((label, ()),), ((child, ()),))))),)
                return {g: self.conv.x_coefficient}
        return {}

    def __call__(self, f: Forest) -> Terms:
        hit = self.cache.get(f)
        if hit is not None:
            return hit
        kind, S, a, T = split(f)
        if kind == "base":
            out = self.base(f)
        else:
            expansion = _compose(S, a, T, self.conv)
            coeff = expansion.get(f)
            if not coeff:
                raise AssertionError(f"split of {f} does not produce it")
            out = self.leibniz(S, a, T)
            if kind == "corolla":
                for h, c in expansion.items():
                    if h != f:
                        for k, ck in self(h).items():
                            add_into(out, k, -c * ck)
            if coeff != 1:
                out = {k: Fraction(c) / coeff for k, c in out.items()}
                out = {k: int(c) if c.denominator == 1 else c for k, c in out.items()}
        self.cache[f] = out
        return out

    def leibniz(self, S: Forest, a: int, T: Forest) -> Terms:
        out: Terms = {}
        dS = self(S)
        for k, c in _compose_lin(dS, a, {T: 1}, self.conv).items():
            add_into(out, k, c)
        dT = self(T)
        sign = -1 if greg_weight(S) % 2 else 1
        for k, c in _compose_lin({S: 1}, a, dT, self.conv).items():
            add_into(out, k, sign * c)
        return out

    def apply(self, terms) -> Terms:
        out: Terms = {}
        for f, c in terms.items():
            for k, ck in self(f).items():
                add_into(out, k, c * ck)
        return out


_DIFFERENTIALS: Dict[Convention, Differential] = {}


def get_differential(convention) -> Differential:
    conv = Convention.parse(convention)
    if conv not in _DIFFERENTIALS:
        _DIFFERENTIALS[conv] = Differential(conv)
    return _DIFFERENTIALS[conv]


def differential(v, convention="dgComGreg") -> LinComb:
    """``d`` of a forest or combination, in the given convention."""
    d = get_differential(convention)
    if isinstance(v, tuple):
        v = LinComb.of(v)
    for f in v:
        if not belongs_to(f, d.conv.family):
            raise FamilyMismatch(f"{f} is not in {d.conv.family.value}")
    return LinComb(d.apply(v))


def d0(v, convention="dgComGreg") -> LinComb:
    """Height-preserving part of ``d`` (the associated graded differential)."""
    d = get_differential(convention)
    if isinstance(v, tuple):
        v = LinComb.of(v)
    out: Terms = {}
    for f, c in v.items():
        h = height(f)
        for k, ck in d(f).items():
            if height(k) == h:
                add_into(out, k, c * ck)
    return LinComb(out)


def _partition(f: Forest):
    from .enumeration import shape_decompose, shape_partition

    return shape_partition(shape_decompose(f)[0])


def d_partition(v, convention="dgComGreg") -> LinComb:
    """Part of ``d`` that keeps the partition of the labels into maximal subtrees.

    The full ``d`` never increases the number of maximal subtrees; this is the
    associated graded differential for that filtration.  It acts on one
    maximal subtree at a time (see :func:`check_subtreewise`).
    """
    d = get_differential(convention)
    if isinstance(v, tuple):
        v = LinComb.of(v)
    out: Terms = {}
    for f, c in v.items():
        p = _partition(f)
        for k, ck in d(f).items():
            if _partition(k) == p:
                add_into(out, k, c * ck)
    return LinComb(out)


def subtreewise_pieces(f: Forest, convention="dgComGreg") -> list:
    """``[phi^-1(S, M_1, .., d(M_i), .., M_k) for each i]`` (unsigned, one per subtree)."""
    from .enumeration import shape_decompose, shape_reconstruct

    d = get_differential(convention)
    shape, subtrees = shape_decompose(f)
    pieces = []
    for i, m in enumerate(subtrees):
        acc: Terms = {}
        for t, c in d(m).items():
            new = list(subtrees)
            new[i] = t
            add_into(acc, shape_reconstruct(shape, new), c)
        pieces.append(LinComb(acc))
    return pieces


def check_subtreewise(f: Forest, convention="dgComGreg", graded=d_partition) -> bool:
    """``graded(f)`` is a signed sum of the per-subtree pieces, with one sign per piece."""
    target = graded(f, convention)
    covered: Terms = {}
    for piece in subtreewise_pieces(f, convention):
        if not piece:
            continue
        restricted = LinComb({k: target.coefficient(k) for k in piece})
        if restricted != piece and restricted != -piece:
            return False
        for k, c in restricted.items():
            add_into(covered, k, c)
    return LinComb(covered) == target


def check_height_filtration(f: Forest, convention="dgComGreg") -> bool:
    """Every term of ``d(f)`` has height at most ``height(f)``."""
    h = height(f)
    return all(height(k) <= h for k in get_differential(convention)(f))


def check_d_squared(n: int, convention="dgComGreg", forests=None) -> Tuple[bool, list]:
    """``d(d(f)) = 0`` on every forest of arity ``n`` (or on ``forests``)."""
    from .enumeration import enumerate_family

    d = get_differential(convention)
    items = forests if forests is not None else enumerate_family(d.conv.family, n)
    failures = []
    for f in items:
        dd = d.apply(d(f))
        if dd:
            failures.append((f, LinComb(dd)))
    return not failures, failures


def check_leibniz(S: Forest, i: int, T: Forest, convention="dgComGreg") -> bool:
    """Signed Leibniz rule for the standard composition ``S o_i T``."""
    from .operad import compose_terms

    d = get_differential(convention)

    def comp(a: Terms, b: Terms) -> Terms:
        out: Terms = {}
        for s, cs in a.items():
            for t, ct in b.items():
                terms = compose_terms(s, i, t, graded=True)
                if d.conv is Convention.DGCOMGREG:
                    terms = reduce_terms(terms, graded=True)
                for f, c in terms.items():
                    add_into(out, f, cs * ct * c)
        return out

    lhs = d.apply(comp({S: 1}, {T: 1}))
    rhs = comp(d(S), {T: 1})
    sign = -1 if greg_weight(S) % 2 else 1
    for f, c in comp({S: 1}, d(T)).items():
        add_into(rhs, f, sign * c)
    return LinComb(lhs) == LinComb(rhs)
