import pytest

from hypertrees.forest import arity, parse_forest
from hypertrees.lincomb import LinComb

from hypertrees.relations import (
    PRESENTATION_IDS,
    SExprError,
    UnknownPresentation,
    builtin_presentations,
    check_relations,
    evaluate,
    parse_sexpr,
    relator_values,
)


@pytest.mark.parametrize("pid", PRESENTATION_IDS)
def test_all_relators_vanish(pid):
    values = relator_values(pid)
    assert values
    assert all(not v for _, v in values), [(r, str(v)) for r, v in values if v]
    assert check_relations(pid)


def _summands(expr):
    if isinstance(expr, list) and expr[0] in ("+", "-"):
        return [t for e in expr[1:] for t in _summands(e)]
    return [expr]


def test_hertling_manin_has_nine_arity_four_terms():
    (hm,) = [r for r, _ in relator_values("FMan") if "o3" in r]
    terms = _summands(parse_sexpr(hm))
    assert len(terms) == 9
    assert all(evaluate(t, "FH") and all(arity(f) == 4 for f in evaluate(t, "FH")) for t in terms)


# LR(a, b, c) = l(a, bc) - l(a, b)c - b l(a, c) measures how far l is from a
# derivation of c; the cubic relation says LR is a derivation in its first input.
LR = "(- (o2 l c) (o1 c l) (perm (2 3) (o1 c l)))"


def test_lr_is_nonzero():
    assert evaluate(parse_sexpr(LR), "FH")


def test_lr_is_a_derivation_in_its_first_input():
    expr = f"(- (o1 {LR} c) (o2 c {LR}) (perm (2 3 4) (o1 c {LR})))"
    assert not evaluate(parse_sexpr(expr), "FH")


def test_lr_derivation_with_a_transposition_is_nonzero():
    for cycle in ("(2 3)", "(1 2)"):
        expr = f"(- (o1 {LR} c) (o2 c {LR}) (perm {cycle} (o1 c {LR})))"
        assert evaluate(parse_sexpr(expr), "FH")


def test_literal_compreLie_relator_with_1_3_is_nonzero():
    value = evaluate(parse_sexpr("(- (o1 x c) (perm (1 3) (o1 c x)) (o2 c x))"), "FH")
    assert value == LinComb({parse_forest("{1<3>,2}"): 1, parse_forest("{1,3<2>}"): -1})


def test_unsymmetrized_comgreg_relator_is_a_basis_element():
    value = evaluate(parse_sexpr("(- (o1 x g) (perm (2 3) (o1 g x)) (o2 g x))"), "FG")
    assert str(value) == "B<1><2><3>"


def test_presentations_parse():
    table = builtin_presentations()
    assert set(table) == set(PRESENTATION_IDS)
    assert table["RedComGreg"].family.value == "FRG"


def test_sexpr_errors():
    for bad in ["(o1 x", "o1 x)", "()", "(o1 x x) x"]:
        with pytest.raises(SExprError):
            evaluate(parse_sexpr(bad))
    with pytest.raises(SExprError):
        evaluate(parse_sexpr("(frob x x)"))
    with pytest.raises(UnknownPresentation):
        relator_values("Lie")
