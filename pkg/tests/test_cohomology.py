import json
from math import factorial

import pytest

from hypertrees.cohomology import CochainComplex, betti, complex_for, euler_char, h0_basis
from hypertrees.series import hilbert


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_betti_dgcomgreg(n):
    assert betti(n, "dgComGreg") == [n ** (n - 1)] + [0] * (n - 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_betti_greg(n):
    assert betti(n, "Greg-1") == [factorial(n - 1)] + [0] * (n - 1)


@pytest.mark.slow
@pytest.mark.parametrize("conv, top", [("dgComGreg", 625), ("Greg-1", 24)])
def test_betti_arity_five(conv, top):
    assert betti(5, conv) == [top, 0, 0, 0, 0]


def test_dims_are_the_v_graded_series():
    series = hilbert("FRG", 4)
    cx = complex_for(4, "dgComGreg")
    for k, dim in enumerate(cx.dims):
        coeff = series[4].substitute(u=1).coefficient(0, k) * factorial(4)
        assert dim == coeff


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_euler_characteristic(n):
    assert euler_char(n) == n ** (n - 1)
    assert euler_char(n) == int(hilbert("FRG", n).egf_counts(1, -1)[n])


def test_complex_is_a_complex():
    assert complex_for(4, "dgComGreg").check_d_squared()
    assert complex_for(4, "Greg-1").check_d_squared()


def test_h0_is_a_kernel():
    from hypertrees.differential import differential

    basis = h0_basis(3)
    assert len(basis) == 9
    assert all(not differential(v) for v in basis)


def test_dump_matrices(tmp_path):
    cx = CochainComplex.build(3, "dgComGreg")
    written = cx.dump_matrices(tmp_path)
    assert len(written) == 2
    payload = json.loads(written[0].read_text())
    rows, cols = payload["shape"]
    assert (rows, cols) == (cx.dims[1], cx.dims[0])
    for r, c, num, den in payload["entries"]:
        assert 0 <= r < rows and 0 <= c < cols and num != 0 and den >= 1
