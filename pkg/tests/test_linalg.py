from fractions import Fraction

from hypothesis import given, strategies as st

from hypertrees.linalg import Echelon, kernel, rank


def naive_rank(rows, ncols):
    m = [[Fraction(r.get(j, 0)) for j in range(ncols)] for r in rows]
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][col]:
                f = m[i][col] / m[rk][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


entry = st.one_of(st.integers(-3, 3), st.fractions(min_value=-2, max_value=2, max_denominator=4))
matrices = st.integers(1, 6).flatmap(
    lambda ncols: st.lists(st.lists(entry, min_size=ncols, max_size=ncols), min_size=1, max_size=7)
)


def as_rows(m):
    return [{j: v for j, v in enumerate(r) if v} for r in m]


@given(matrices)
def test_rank_matches_dense_elimination(m):
    rows = as_rows(m)
    assert rank(rows) == naive_rank(rows, len(m[0]))


@given(matrices)
def test_kernel_vectors_are_in_the_kernel_and_independent(m):
    cols = as_rows(m)  # read rows as columns of a matrix
    ker = kernel(cols)
    for x in ker:
        total = {}
        for i, c in x.items():
            for k, v in cols[i].items():
                total[k] = total.get(k, 0) + c * v
        assert not any(total.values())
    assert rank(ker) == len(ker)
    assert len(ker) + rank(cols) == len(cols)


def test_echelon_contains():
    e = Echelon()
    assert e.add({"a": 1, "b": 2})
    assert not e.add({"a": 2, "b": 4})
    assert e.contains({"a": Fraction(1, 2), "b": 1})
    assert not e.contains({"b": 1})
    assert e.rank == 1
