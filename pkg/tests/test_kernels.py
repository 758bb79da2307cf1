"""The numba and numpy kernel paths must agree exactly."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubtwist import _kernels
from schubtwist.rootsys import build

pytestmark = pytest.mark.skipif(_kernels.NUMBA is None, reason="numba not installed")


def arrays(rank):
    rows = st.lists(st.tuples(*[st.integers(-5, 5)] * rank), min_size=1, max_size=30, unique=True)
    return rows.flatmap(
        lambda r: st.tuples(st.just(np.array(r, dtype=np.int64)),
                            st.lists(st.integers(1, 4), min_size=len(r), max_size=len(r)).map(
                                lambda m: np.array(m, dtype=np.int64)))
    )


@pytest.fixture(autouse=True)
def restore_backend():
    prev = _kernels.backend()
    yield
    _kernels._backend = prev


def _both(fn):
    _kernels.set_backend("numba")
    a = fn()
    _kernels.set_backend("numpy")
    b = fn()
    return a, b


@pytest.mark.parametrize("t", ["B2", "G2", "A3"])
@given(data=st.data())
def test_demazure_backends_agree(t, data):
    rs = build(t)
    W, M = data.draw(arrays(rs.rank))
    i = data.draw(st.integers(0, rs.rank - 1))
    a, b = _both(lambda: _kernels.demazure(W, M, rs.alpha(i), i))
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


@pytest.mark.parametrize("t", ["B2", "G2", "A3"])
@given(data=st.data())
def test_sl2_step_backends_agree(t, data):
    rs = build(t)
    W, M = data.draw(arrays(rs.rank))
    i = data.draw(st.integers(0, rs.rank - 1))
    strict = data.draw(st.booleans())
    a, b = _both(lambda: _kernels.sl2_step(W, M, rs.alpha(i), i, strict))
    for x, y in zip(a[:4], b[:4]):
        assert np.array_equal(x, y)
    assert a[4] == b[4]


def test_combine_merges_and_drops_zeros():
    W = np.array([[1, 0], [0, 1], [1, 0], [2, 2]], dtype=np.int64)
    M = np.array([1, 2, -1, 3], dtype=np.int64)
    w, m = _kernels.combine(W, M)
    assert w.tolist() == [[0, 1], [2, 2]] and m.tolist() == [2, 3]


def test_set_backend_rejects_unknown():
    with pytest.raises(ValueError):
        _kernels.set_backend("cuda")
