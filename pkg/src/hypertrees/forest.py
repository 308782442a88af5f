"""Canonical forests of rooted (Greg) hypertrees.

Encoding
--------
A vertex is a pair ``(label, groups)``.  White vertices carry a positive integer
label, black vertices carry ``0``.  ``groups`` is a sorted tuple of groups; a
group is the sorted tuple of the subtrees hanging from the vertex through one
edge.  A group with one member is a simple edge, a group with ``m >= 2`` members
is a hyperedge of weight ``m - 1``.  A forest is the sorted tuple of its roots.

All of this is plain nested tuples, so canonical forests are hashable and
structural equality is isomorphism.

Black vertices can be temporarily *marked* with negative labels ``-1, -2, ...``
to remember an ordering of the black vertices (the orientation used for the
graded operads).  :func:`canonicalize_oriented` sorts a marked forest, reads
the marks back in canonical pre-order and returns the Koszul sign of that
reordering.
"""

from __future__ import annotations

import enum
import re
from typing import Dict, Iterator, List, Sequence, Tuple

Vertex = Tuple[int, tuple]
Forest = Tuple[Vertex, ...]

BLACK = 0


class Family(str, enum.Enum):
    RT = "RT"
    GREG = "Greg"
    FH = "FH"
    FG = "FG"
    FRG = "FRG"

    @classmethod
    def parse(cls, value) -> "Family":
        if isinstance(value, cls):
            return value
        for fam in cls:
            if fam.value.lower() == str(value).lower():
                return fam
        raise ValueError(f"unknown family {value!r}")


class InvalidStructure(ValueError):
    pass


class ParseError(ValueError):
    pass


# --- canonical form -----------------------------------------------------------


def _canon_vertex(v) -> Vertex:
    label, groups = v
    cg = [tuple(sorted(_canon_vertex(m) for m in g)) for g in groups]
    cg.sort()
    return (label, tuple(cg))


def canonicalize(forest: Sequence) -> Forest:
    """Sort groups, members and roots recursively (unmarked forests only)."""
    return tuple(sorted(_canon_vertex(r) for r in forest))


def _canon_marked(v):
    # returns (sort key with marks erased, vertex with marks kept)
    label, groups = v
    cgroups = []
    for g in groups:
        members = sorted((_canon_marked(m) for m in g), key=lambda kv: kv[0])
        cgroups.append(
            (tuple(k for k, _ in members), tuple(x for _, x in members))
        )
    cgroups.sort(key=lambda kv: kv[0])
    key = (label if label > 0 else 0, tuple(k for k, _ in cgroups))
    return key, (label, tuple(x for _, x in cgroups))


def _strip_marks(v) -> Vertex:
    label, groups = v
    return (
        label if label > 0 else 0,
        tuple(tuple(_strip_marks(m) for m in g) for g in groups),
    )


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    sign = 1
    items = list(seq)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def canonicalize_oriented(forest: Sequence) -> Tuple[Forest, int]:
    """Canonical form of a marked forest and the sign of its black ordering.

    Marks ``-1, -2, ...`` give the current order of the black vertices; the
    canonical order is the pre-order of the canonical form (root first, then
    groups and members left to right).  Unmarked blacks (label 0) are allowed
    only when there is at most one of them.
    """
    pairs = sorted((_canon_marked(r) for r in forest), key=lambda kv: kv[0])
    marked = tuple(x for _, x in pairs)
    marks = [lab for lab in _preorder_labels(marked) if lab < 0]
    sign = permutation_sign([-m for m in marks])
    return tuple(_strip_marks(r) for r in marked), sign


def _preorder_labels(forest) -> Iterator[int]:
    stack = list(reversed(forest))
    while stack:
        label, groups = stack.pop()
        yield label
        for g in reversed(groups):
            stack.extend(reversed(g))


def mark_blacks(forest: Forest, start: int = 1) -> Tuple[Forest, int]:
    """Replace black labels by ``-start, -start-1, ...`` in pre-order.

    Returns the marked forest and the next free mark index.
    """
    counter = [start]

    def walk(v):
        label, groups = v
        if label <= 0:
            label = -counter[0]
            counter[0] += 1
        return (label, tuple(tuple(walk(m) for m in g) for g in groups))

    out = tuple(walk(r) for r in forest)
    return out, counter[0]


# --- traversal and statistics ---------------------------------------------------


def iter_vertices(forest: Forest) -> Iterator[Vertex]:
    """All vertices in canonical pre-order."""
    stack = list(reversed(forest))
    while stack:
        v = stack.pop()
        yield v
        for g in reversed(v[1]):
            stack.extend(reversed(g))


def labels(forest: Forest) -> List[int]:
    return sorted(v[0] for v in iter_vertices(forest) if v[0] > 0)


def arity(forest: Forest) -> int:
    return sum(1 for v in iter_vertices(forest) if v[0] > 0)


def greg_weight(forest: Forest) -> int:
    """Number of black vertices (the cohomological degree)."""
    return sum(1 for v in iter_vertices(forest) if v[0] <= 0)


def hypertree_weight(forest: Forest) -> int:
    """(#trees - 1) plus the sum of the edge weights ``|group| - 1``."""
    w = len(forest) - 1
    for v in iter_vertices(forest):
        for g in v[1]:
            w += len(g) - 1
    return w


def grading(forest: Forest) -> Tuple[int, int, int]:
    return arity(forest), hypertree_weight(forest), greg_weight(forest)


def height(forest: Forest) -> int:
    """Weighted position of the hyperedges above white vertices.

    Each hyperedge contributes its weight times the number of white vertices on
    the path from the vertex carrying it down to the root (that vertex
    included).  A hyperedge carried by a black vertex, which only occurs outside
    the reduced family, contributes in addition its weight times the number of
    black vertices on that path; on reduced forests this extra term is zero.
    """
    total = 0

    def walk(v, whites, blacks):
        nonlocal total
        label, groups = v
        if label > 0:
            whites += 1
        else:
            blacks += 1
        for g in groups:
            if len(g) > 1:
                total += (len(g) - 1) * whites
                if label <= 0:
                    total += (len(g) - 1) * blacks
            for m in g:
                walk(m, whites, blacks)

    for r in forest:
        walk(r, 0, 0)
    return total


def is_reduced(forest: Forest) -> bool:
    """No black vertex carries a hyperedge."""
    return all(
        all(len(g) == 1 for g in v[1]) for v in iter_vertices(forest) if v[0] <= 0
    )


# --- validation -------------------------------------------------------------------


def validate(forest: Forest, family, strict_labels: bool = False) -> None:
    """Raise :class:`InvalidStructure` unless ``forest`` belongs to ``family``."""
    family = Family.parse(family)
    if not forest:
        raise InvalidStructure("empty forest")
    seen = set()
    for v in iter_vertices(forest):
        label, groups = v
        if label > 0:
            if label in seen:
                raise InvalidStructure(f"label {label} repeated")
            seen.add(label)
        elif label == BLACK:
            if family in (Family.RT, Family.FH):
                raise InvalidStructure(f"black vertex not allowed in {family.value}")
            if len(groups) < 2:
                raise InvalidStructure("black vertex with fewer than two incoming edges")
            if family is Family.FRG and any(len(g) > 1 for g in groups):
                raise InvalidStructure("hyperedge above a black vertex in FRG")
        else:
            raise InvalidStructure(f"bad label {label}")
        for g in groups:
            if not g:
                raise InvalidStructure("empty group")
            if len(g) > 1 and family in (Family.RT, Family.GREG):
                raise InvalidStructure(f"hyperedge not allowed in {family.value}")
    if len(forest) > 1 and family in (Family.RT, Family.GREG):
        raise InvalidStructure(f"{family.value} elements are single trees")
    if not seen:
        raise InvalidStructure("no white vertex")
    if strict_labels and seen != set(range(1, len(seen) + 1)):
        raise InvalidStructure(f"labels {sorted(seen)} are not 1..{len(seen)}")


def belongs_to(forest: Forest, family) -> bool:
    try:
        validate(forest, family)
    except InvalidStructure:
        return False
    return True


def infer_family(forest: Forest) -> Family:
    """Smallest family containing ``forest``."""
    for fam in (Family.RT, Family.GREG, Family.FH, Family.FRG, Family.FG):
        if belongs_to(forest, fam):
            return fam
    raise InvalidStructure("not a forest of rooted Greg hypertrees")


# --- relabelling ----------------------------------------------------------------


def relabel(forest: Forest, mapping: Dict[int, int]) -> Forest:
    """Rename white labels (no re-sorting; see :func:`relabel_canonical`)."""

    def walk(v):
        label, groups = v
        if label > 0:
            label = mapping.get(label, label)
        return (label, tuple(tuple(walk(m) for m in g) for g in groups))

    return tuple(walk(r) for r in forest)


def relabel_canonical(forest: Forest, mapping: Dict[int, int], graded: bool = False) -> Tuple[Forest, int]:
    """Rename white labels and re-canonicalize.

    With ``graded`` the sign of the induced reordering of black vertices is
    returned, otherwise the sign is 1.
    """
    if graded and greg_weight(forest) > 1:
        marked, _ = mark_blacks(forest)
        return canonicalize_oriented(relabel(marked, mapping))
    return canonicalize(relabel(forest, mapping)), 1


def standardize(forest: Forest) -> Tuple[Forest, Dict[int, int]]:
    """Order-preserving relabelling onto ``1..n``.

    Returns the standardized forest and the map back to the original labels.
    Order-preserving maps keep the canonical arrangement, so no re-sorting is
    needed and orientation signs are unaffected.
    """
    labs = labels(forest)
    fwd = {lab: i + 1 for i, lab in enumerate(labs)}
    back = {i + 1: lab for i, lab in enumerate(labs)}
    return relabel(forest, fwd), back


# --- text notation ---------------------------------------------------------------


def format_vertex(v: Vertex) -> str:
    label, groups = v
    head = str(label) if label > 0 else "B"
    return head + "".join("<" + ",".join(format_vertex(m) for m in g) + ">" for g in groups)


def format_forest(forest: Forest) -> str:
    """Text notation: ``1<2><3>``, ``1<2,3>``, ``{1,2}``, ``B<1><2>``."""
    if len(forest) == 1:
        return format_vertex(forest[0])
    return "{" + ",".join(format_vertex(r) for r in forest) + "}"


_TOKEN = re.compile(r"\s*(\d+|B|[<>{},])")


def _tokenize(text: str) -> List[str]:
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_forest(text: str, family=None, strict_labels: bool = True) -> Forest:
    """Parse the text notation into a canonical forest.

    When ``family`` is given the result is validated against it; otherwise it
    only needs to be a valid forest of rooted Greg hypertrees.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"unexpected end of input in {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r} in {text!r}")
        pos += 1
        return tok

    def vertex():
        tok = take()
        if tok == "B":
            label = BLACK
        elif tok.isdigit():
            label = int(tok)
            if label <= 0:
                raise ParseError("labels are positive integers")
        else:
            raise ParseError(f"expected a vertex, got {tok!r} in {text!r}")
        groups = []
        while peek() == "<":
            take("<")
            members = [vertex()]
            while peek() == ",":
                take(",")
                members.append(vertex())
            take(">")
            groups.append(tuple(members))
        return (label, tuple(groups))

    if peek() == "{":
        take("{")
        roots = [vertex()]
        while peek() == ",":
            take(",")
            roots.append(vertex())
        take("}")
    else:
        roots = [vertex()]
    if pos != len(tokens):
        raise ParseError(f"trailing input in {text!r}")
    forest = canonicalize(roots)
    validate(forest, family if family is not None else Family.FG, strict_labels=strict_labels)
    return forest


# --- small constructors -------------------------------------------------------------


def white(label: int, *groups) -> Vertex:
    return (label, tuple(tuple(g) for g in groups))


def leaf(label: int) -> Vertex:
    return (label, ())
