"""Relators as s-expressions, evaluated in the forest models.

Grammar::

    expr  := SYMBOL | INT
           | (oK expr expr)          partial composition at K
           | (perm CYCLE... expr)    right action, CYCLE = (i j ...)
           | (+ expr...) | (- expr expr...) | (- expr) | (* INT expr)

Symbols are ``x``, ``y``, ``c``, ``g`` and ``l = x - y``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Tuple, Union

from .forest import Family, arity
from .lincomb import LinComb
from .operad import act, compose_lin, generator, perm_from_cycles

SExpr = Union[str, int, list]


class UnknownPresentation(KeyError):
    pass


class SExprError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(\(|\)|[^\s()]+)")


def parse_sexpr(text: str) -> SExpr:
    tokens = _TOKEN.findall(text)
    pos = 0

    def read():
        nonlocal pos
        if pos >= len(tokens):
            raise SExprError("unexpected end of expression")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            items = []
            while pos < len(tokens) and tokens[pos] != ")":
                items.append(read())
            if pos >= len(tokens):
                raise SExprError("missing ')'")
            pos += 1
            return items
        if tok == ")":
            raise SExprError("unexpected ')'")
        if re.fullmatch(r"-?\d+", tok):
            return int(tok)
        return tok

    out = read()
    if pos != len(tokens):
        raise SExprError(f"trailing tokens in {text!r}")
    return out


def _arity(v: LinComb) -> int:
    return max((arity(f) for f in v), default=0)


def evaluate(expr: SExpr, family=Family.FG) -> LinComb:
    """Value of a relator in the operad of ``family`` (empty sums are ``0``)."""
    family = Family.parse(family)
    if isinstance(expr, str):
        return generator(expr)
    if isinstance(expr, int):
        raise SExprError("bare integers are only allowed as (* k e) factors")
    if not expr:
        raise SExprError("empty list")
    head, *args = expr
    if head == "+":
        out = LinComb()
        for a in args:
            out = out + evaluate(a, family)
        return out
    if head == "-":
        if len(args) == 1:
            return -evaluate(args[0], family)
        out = evaluate(args[0], family)
        for a in args[1:]:
            out = out - evaluate(a, family)
        return out
    if head == "*":
        k, e = args
        return evaluate(e, family) * k
    if head == "perm":
        *cycles, e = args
        val = evaluate(e, family)
        if not val:
            return val
        sigma = perm_from_cycles(cycles, _arity(val))
        return act(sigma, val)
    m = re.fullmatch(r"o(\d+)", str(head))
    if m:
        a, b = (evaluate(e, family) for e in args)
        return compose_lin(a, int(m.group(1)), b, family)
    raise SExprError(f"unknown head {head!r}")


@dataclass(frozen=True)
class Presentation:
    name: str
    family: Family
    relators: Tuple[str, ...]


def parse_relator_file(text: str) -> Dict[str, Presentation]:
    """Sections ``[Name Family]`` followed by one relator per line; ``;`` comments."""
    out: Dict[str, Presentation] = {}
    name, fam, rels = None, None, []

    def flush():
        if name is not None:
            out[name] = Presentation(name, fam, tuple(rels))

    for raw in text.splitlines():
        line = raw.split(";", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            flush()
            name, fam_text = line.strip("[]").split()
            fam, rels = Family.parse(fam_text), []
        else:
            if name is None:
                raise SExprError("relator before any section header")
            parse_sexpr(line)
            rels.append(line)
    flush()
    return out


def builtin_presentations() -> Dict[str, Presentation]:
    text = resources.files("hypertrees").joinpath("data/relators.sexp").read_text()
    return parse_relator_file(text)


PRESENTATION_IDS = ("PreLie", "Greg", "ComPreLie", "ComGreg", "RedComGreg", "FMan")


def relator_values(presentation_id: str) -> List[Tuple[str, LinComb]]:
    table = builtin_presentations()
    if presentation_id not in table:
        raise UnknownPresentation(presentation_id)
    p = table[presentation_id]
    return [(r, evaluate(parse_sexpr(r), p.family)) for r in p.relators]


def check_relations(presentation_id: str) -> bool:
    """True iff every relator of the presentation vanishes in its forest model."""
    return all(not value for _, value in relator_values(presentation_id))
