import random

import pytest
from hypothesis import given, strategies as st

from hypertrees.checks import check_leibniz_random
from hypertrees.descriptions import (
    PRINTED_FOREST_SIGNS,
    PRINTED_TREE_SIGNS,
    UncancelledTerm,
    itemized_d0,
    itemized_greg,
)
from hypertrees.differential import (
    Convention,
    check_d_squared,
    check_height_filtration,
    check_leibniz,
    check_subtreewise,
    d0,
    d_partition,
    differential,
)
from hypertrees.enumeration import enumerate_family
from hypertrees.forest import parse_forest
from hypertrees.operad import FamilyMismatch

CONVS = ["Greg-1", "dgComGreg"]


def test_generator_values():
    x, c = parse_forest("1<2>"), parse_forest("{1,2}")
    assert str(differential(x, "dgComGreg")) == "B<1><2>"
    assert str(differential(x, "Greg-1")) == "-B<1><2>"
    assert not differential(c, "dgComGreg")
    assert not differential(parse_forest("B<1><2>"), "Greg-1")


def test_convention_aliases():
    assert Convention.parse("Greg₋₁") is Convention.GREG
    assert Convention.parse("dgcomgreg") is Convention.DGCOMGREG
    with pytest.raises(ValueError):
        Convention.parse("Lie")


def test_family_is_checked():
    with pytest.raises(FamilyMismatch):
        differential(parse_forest("{1,2}"), "Greg-1")


@pytest.mark.parametrize("conv", CONVS)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_d_squared_exhaustive(conv, n):
    ok, failures = check_d_squared(n, conv)
    assert ok, failures[:3]


@pytest.mark.slow
@pytest.mark.parametrize("conv", CONVS)
def test_d_squared_arity_five(conv):
    ok, failures = check_d_squared(5, conv)
    assert ok, failures[:3]


@pytest.mark.parametrize("conv", CONVS)
def test_leibniz_random(conv):
    rep = check_leibniz_random(conv, max_arity=4, trials=300, seed=2)
    assert rep.ok, rep.failures


@pytest.mark.parametrize("conv", CONVS)
def test_leibniz_exhaustive_small(conv):
    fam = Convention.parse(conv).family
    for a in (1, 2):
        for S in enumerate_family(fam, a):
            for T in enumerate_family(fam, 2):
                for i in range(1, a + 1):
                    assert check_leibniz(S, i, T, conv)


@given(st.sampled_from(enumerate_family("FRG", 4)))
def test_height_filtration(f):
    assert check_height_filtration(f, "dgComGreg")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_itemized_greg_equals_d(n):
    for f in enumerate_family("Greg", n):
        assert itemized_greg(f) == differential(f, "Greg-1")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_itemized_forest_description_equals_partition_part(n):
    for f in enumerate_family("FRG", n):
        assert itemized_d0(f) == d_partition(f)


def test_printed_signs_leave_invalid_blacks():
    with pytest.raises(UncancelledTerm):
        itemized_greg(parse_forest("1<2>"), PRINTED_TREE_SIGNS)
    with pytest.raises(UncancelledTerm):
        itemized_d0(parse_forest("1<2>"), PRINTED_FOREST_SIGNS)


def test_partition_part_acts_subtreewise():
    for n in (2, 3, 4):
        for f in enumerate_family("FRG", n):
            assert check_subtreewise(f)


def test_height_filter_is_not_subtreewise():
    f = parse_forest("1<2><3,4>")
    assert not check_subtreewise(f, graded=d0)
    extra = d0(f) - d_partition(f)
    assert str(extra) == "-1<B<2><3>,4> - 1<B<2><4>,3>"


def test_d0_squares_to_zero():
    for n in (2, 3, 4):
        for f in enumerate_family("FRG", n):
            assert not d0(d0(f))
            assert not d_partition(d_partition(f))
