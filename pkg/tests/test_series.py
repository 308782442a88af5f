from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hypertrees.series import (
    BadConstantTerm,
    NonUnitLinearTerm,
    Poly,
    PowerSeries,
    SERIES_IDS,
    UnknownSeries,
    bigraded_table,
    dual_dims,
    exp_t,
    hilbert,
    koszul_check,
    lc_multilinear_dim,
    arrow_multilinear_dim,
    ps_compose,
    ps_exp,
    ps_inverse,
    ps_log,
    ps_reverse,
    ps_reverse_lagrange,
    species_solution,
)


def counts(series_id, order, u=1, v=1):
    return [int(c) for c in hilbert(series_id, order).egf_counts(u, v)[1:]]


@pytest.mark.parametrize(
    "sid, expected",
    [
        ("RT", [1, 2, 9, 64, 625, 7776]),
        ("Greg", [1, 3, 22, 262, 4336, 91984]),
        ("FH", [1, 3, 19, 189, 2576, 44683]),
        ("FG", [1, 4, 38, 587, 12607]),
        ("FRG", [1, 4, 35, 484, 9197]),
        ("ComPreLie_dual", [1, 3, 8, 24, 89, 415]),
        ("ComGreg_dual", [1, 4, 10, 27, 93, 420]),
    ],
)
def test_closed_form_counts(sid, expected):
    assert counts(sid, len(expected)) == expected


@pytest.mark.parametrize("family", ["RT", "Greg", "FH", "FG", "FRG"])
def test_species_solver_matches_closed_form(family):
    assert species_solution(family, 7) == hilbert(family, 7)


def test_euler_specialisation_gives_cayley_numbers():
    assert counts("FRG", 7, 1, -1) == [n ** (n - 1) for n in range(1, 8)]
    # FMan(t, u) = FRG(t, u, -1), including the u grading
    assert hilbert("FMan", 6) == hilbert("FRG", 6).substitute(v=-1)


@pytest.mark.parametrize("pair", [("ComPreLie", "ComPreLie_dual"), ("ComGreg", "ComGreg_dual")])
def test_koszul_equation_through_t8(pair):
    assert koszul_check(hilbert(pair[0], 8), hilbert(pair[1], 8))


def test_koszul_equation_detects_a_wrong_dual():
    assert not koszul_check(hilbert("ComPreLie", 6), hilbert("ComGreg_dual", 6))


def test_logarithmic_numbers_and_dual_dimension():
    assert dual_dims("ComPreLie_dual", 4)[3] == 24
    assert [lc_multilinear_dim(n) for n in range(1, 7)] == dual_dims("ComPreLie_dual", 6)
    assert lc_multilinear_dim(4) + arrow_multilinear_dim(4) == dual_dims("ComGreg_dual", 4)[3] == 27


def _random_series(coeffs, order, c0=0, c1=1):
    return PowerSeries([Poly.const(c0), Poly.const(c1)] + [Poly.const(Fraction(c)) for c in coeffs], order)


small = st.lists(st.integers(-5, 5), min_size=6, max_size=6)


@given(small, st.sampled_from([1, -1, 2, Fraction(1, 3)]))
def test_newton_and_lagrange_reversion_agree(cs, c1):
    f = _random_series(cs, 7, 0, c1)
    g = ps_reverse(f)
    assert g == ps_reverse_lagrange(f)
    assert ps_compose(f, g) == PowerSeries.t(7)


@given(small)
def test_exp_log_inverse(cs):
    s = _random_series(cs, 7, 0, 1)
    assert ps_log(ps_exp(s)) == s
    one_plus = s + 1
    assert (one_plus * ps_inverse(one_plus)) == PowerSeries.one(7)


def test_bivariate_reversion_of_fh():
    # ln(1+ut)/u e^{-t} has u-polynomial coefficients; the reversion stays polynomial
    table = bigraded_table(hilbert("FH", 4))
    assert table[(3, 0, 0)] == 9 and table[(3, 1, 0)] == 9 and table[(3, 2, 0)] == 1


def test_series_errors():
    with pytest.raises(BadConstantTerm):
        ps_exp(exp_t(4))
    with pytest.raises(BadConstantTerm):
        ps_log(PowerSeries.t(4))
    with pytest.raises(NonUnitLinearTerm):
        ps_reverse(PowerSeries([Poly(), Poly.u()], 4))
    with pytest.raises(BadConstantTerm):
        ps_reverse(exp_t(4))
    with pytest.raises(UnknownSeries):
        hilbert("nope", 3)


def test_series_ids():
    assert {"RT", "Greg", "FH", "FG", "FRG", "FMan"} <= set(SERIES_IDS)
