import random

import pytest
from hypothesis import given, strategies as st

from hypertrees.enumeration import enumerate_family
from hypertrees.forest import (
    Family,
    InvalidStructure,
    ParseError,
    canonicalize,
    canonicalize_oriented,
    format_forest,
    grading,
    height,
    infer_family,
    is_reduced,
    mark_blacks,
    parse_forest,
    relabel_canonical,
    standardize,
)

FG4 = enumerate_family("FG", 4)
FG3 = enumerate_family("FG", 3)


@pytest.mark.parametrize("text", ["1<2><3>", "1<2,3>", "{1,2}", "B<1><2>", "{1<3>,2}", "B<1<2>><3,4>"])
def test_round_trip_examples(text):
    assert format_forest(parse_forest(text)) == text


@given(st.sampled_from(FG4))
def test_round_trip_every_printed_forest(f):
    assert parse_forest(format_forest(f)) == f


def _shuffle(v, rng):
    label, groups = v
    groups = [[_shuffle(m, rng) for m in g] for g in groups]
    for g in groups:
        rng.shuffle(g)
    rng.shuffle(groups)
    return (label, tuple(tuple(g) for g in groups))


@given(st.sampled_from(FG4), st.integers(0, 10**6))
def test_canonical_form_ignores_child_order(f, seed):
    rng = random.Random(seed)
    roots = [_shuffle(r, rng) for r in f]
    rng.shuffle(roots)
    assert canonicalize(roots) == f


def test_parse_rejects_noncanonical_labels():
    with pytest.raises(InvalidStructure):
        parse_forest("1<3>")
    assert parse_forest("1<3>", strict_labels=False) == ((1, (((3, ()),),)),)


@pytest.mark.parametrize("text", ["1<", "1<2", "1<2>>", "{1,2", "", "B", "0<1>", "1<2>x"])
def test_parse_errors(text):
    with pytest.raises((ParseError, InvalidStructure)):
        parse_forest(text)


@pytest.mark.parametrize(
    "text, family",
    [("B<1>", "FG"), ("1<1>", "FG"), ("{1,2}", "Greg"), ("1<2,3>", "RT"), ("B<1><2>", "FH"), ("B<1,2><3>", "FRG")],
)
def test_validation(text, family):
    with pytest.raises(InvalidStructure):
        parse_forest(text, family, strict_labels=False)


def test_infer_family():
    cases = {"1<2>": Family.RT, "B<1><2>": Family.GREG, "{1,2}": Family.FH,
             "{B<1><2>,3}": Family.FRG, "B<1,2><3>": Family.FG}
    for text, fam in cases.items():
        assert infer_family(parse_forest(text)) is fam


def test_grading():
    # (arity, hypertree weight, black count)
    assert grading(parse_forest("1<2,3>")) == (3, 1, 0)
    assert grading(parse_forest("{1,2,3}")) == (3, 2, 0)
    assert grading(parse_forest("B<1><2,3>")) == (3, 1, 1)


def test_height():
    assert height(parse_forest("{1<2>,3}")) == 0
    assert height(parse_forest("1<2,3>")) == 1
    assert height(parse_forest("1<2<3,4>>")) == 2
    # a hyperedge on a black vertex counts the blacks below it too
    assert height(parse_forest("B<1,2><3>")) == 1


def _swap_marks(v, a, b):
    label, groups = v
    label = {a: b, b: a}.get(label, label)
    return (label, tuple(tuple(_swap_marks(m, a, b) for m in g) for g in groups))


def test_oriented_canonical_sign_flips_with_mark_order():
    f = parse_forest("B<B<1><2>><3>")
    marked, _ = mark_blacks(f)
    assert canonicalize_oriented(marked) == (f, 1)
    swapped = tuple(_swap_marks(r, -1, -2) for r in marked)
    assert canonicalize_oriented(swapped) == (f, -1)


def test_relabel_and_standardize():
    f = parse_forest("1<5>", strict_labels=False)
    g, back = standardize(f)
    assert format_forest(g) == "1<2>" and back == {1: 1, 2: 5}
    h, sign = relabel_canonical(parse_forest("1<2>"), {1: 2, 2: 1})
    assert format_forest(h) == "2<1>" and sign == 1
