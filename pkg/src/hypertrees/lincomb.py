"""Formal rational linear combinations of canonical forests."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .forest import Forest, format_forest, parse_forest


def add_into(acc: Dict[Forest, object], forest: Forest, coeff) -> None:
    """``acc[forest] += coeff`` dropping zeros."""
    c = acc.get(forest, 0) + coeff
    if c:
        acc[forest] = c
    else:
        acc.pop(forest, None)


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class LinComb:
    """Immutable map forest -> nonzero coefficient (``int`` or ``Fraction``)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Forest, object] | Iterable[Tuple[Forest, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Forest, object] = {}
        for f, c in items:
            add_into(acc, f, c)
        self.terms = {f: _normalize(c) for f, c in acc.items()}

    @classmethod
    def of(cls, forest: Forest, coeff=1) -> "LinComb":
        return cls({forest: coeff})

    @classmethod
    def parse(cls, text: str, family=None) -> "LinComb":
        """Parse ``"1<2<3>> + 1<2><3>"`` or ``"1<2> - 2<1>"`` (integer coefficients)."""
        acc: Dict[Forest, object] = {}
        text = text.strip()
        if text == "0":
            return cls()
        sign = 1
        token = ""
        depth = 0
        parts = []
        for ch in text:
            if ch in "<{":
                depth += 1
            elif ch in ">}":
                depth -= 1
            if depth == 0 and ch in "+-" and token.strip():
                parts.append((sign, token))
                sign, token = (1 if ch == "+" else -1), ""
            elif depth == 0 and ch in "+-":
                sign = sign * (1 if ch == "+" else -1)
            else:
                token += ch
        parts.append((sign, token))
        for sgn, tok in parts:
            tok = tok.strip()
            coeff = Fraction(1)
            if "*" in tok:
                num, tok = tok.split("*", 1)
                coeff = Fraction(num.strip())
            add_into(acc, parse_forest(tok.strip(), family), sgn * coeff)
        return cls(acc)

    def __iter__(self) -> Iterator[Forest]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, forest: Forest):
        return self.terms.get(forest, 0)

    def __add__(self, other: "LinComb") -> "LinComb":
        acc = dict(self.terms)
        for f, c in other.terms.items():
            add_into(acc, f, c)
        return LinComb(acc)

    def __neg__(self) -> "LinComb":
        return LinComb({f: -c for f, c in self.terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __mul__(self, scalar) -> "LinComb":
        return LinComb({f: c * scalar for f, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"LinComb({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        # term order: lexicographic in the text notation
        for f in sorted(self.terms, key=format_forest):
            c = self.terms[f]
            body = format_forest(f)
            if c == 1:
                term, neg = body, False
            elif c == -1:
                term, neg = body, True
            else:
                neg = c < 0
                term = f"{abs(c)}*{body}"
            if not out:
                out.append(("-" if neg else "") + term)
            else:
                out.append(("- " if neg else "+ ") + term)
        return " ".join(out)
