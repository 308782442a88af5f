import pytest
from hypothesis import given, strategies as st

from hypertrees.enumeration import (
    ArityTooLarge,
    count_bigraded,
    enumerate_family,
    marginal,
    set_partitions,
    shape_decompose,
    shape_partition,
    shape_reconstruct,
    shapes,
)
from hypertrees.forest import belongs_to, format_forest, labels
from hypertrees.series import bigraded_table, hilbert

LIMITS = {"RT": 6, "Greg": 6, "FH": 6, "FG": 5, "FRG": 5}


def test_arity_two_elements():
    assert sorted(map(format_forest, enumerate_family("Greg", 2))) == ["1<2>", "2<1>", "B<1><2>"]
    assert sorted(map(format_forest, enumerate_family("FH", 2))) == ["1<2>", "2<1>", "{1,2}"]


@pytest.mark.parametrize("family", list(LIMITS))
def test_enumeration_matches_bigraded_series(family):
    series = bigraded_table(hilbert(family, LIMITS[family]))
    for n in range(1, LIMITS[family] + 1):
        expected = {k: c for k, c in series.items() if k[0] == n and c}
        assert count_bigraded(family, n) == expected


@pytest.mark.parametrize("family", list(LIMITS))
def test_elements_are_distinct_valid_and_fully_labelled(family):
    n = min(LIMITS[family], 4)
    forests = enumerate_family(family, n)
    assert len(set(forests)) == len(forests)
    assert all(belongs_to(f, family) and labels(f) == list(range(1, n + 1)) for f in forests)


def test_arity_cap():
    with pytest.raises(ArityTooLarge):
        enumerate_family("FG", 6)
    with pytest.raises(ArityTooLarge):
        enumerate_family("RT", 4, max_arity=3)
    assert len(enumerate_family("RT", 7, max_arity=7)) == 7**6


def test_marginals():
    table = count_bigraded("Greg", 4)
    assert marginal(table, "k") == {0: 64, 1: 113, 2: 70, 3: 15}
    assert marginal(count_bigraded("FH", 4), "j") == {0: 64, 1: 96, 2: 28, 3: 1}


def test_set_partitions_are_bell_numbers():
    assert [sum(1 for _ in set_partitions(range(n))) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]


def test_shape_counts():
    assert [len(shapes(n)) for n in range(1, 6)] == [1, 2, 8, 55, 507]
    assert [len(shapes(n, trees_only=True)) for n in range(1, 6)] == [1, 1, 4, 29, 256]


@given(st.sampled_from(enumerate_family("FRG", 4) + enumerate_family("FRG", 5)))
def test_shape_round_trip(f):
    shape, subtrees = shape_decompose(f)
    assert shape_reconstruct(shape, subtrees) == f
    blocks = shape_partition(shape)
    assert sorted(x for b in blocks for x in b) == labels(f)
    assert [sorted(labels(t)) for t in subtrees] == [list(b) for b in blocks]
