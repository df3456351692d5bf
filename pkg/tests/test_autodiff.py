import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rcqm import autodiff as ad


def _f(k):
    return ad.sqrt(k @ k + 1.0) * ad.exp(-(k @ k) * 0.1)


@settings(max_examples=30)
@given(st.lists(st.floats(-3, 3), min_size=3, max_size=3))
def test_partial_matches_central_difference(x):
    x = np.array(x)
    h = 1e-6
    for axis in range(3):
        e = np.zeros(3)
        e[axis] = h
        fd = (_f(x + e) - _f(x - e)) / (2 * h)
        assert ad.partial(_f, x, axis) == pytest.approx(fd, rel=1e-6, abs=1e-8)


def test_oracle_derivative_of_omega():
    # d/dk1 sqrt(k^2 + m^2) = k1 / w
    k = np.array([0.3, 0.4, 1.2])
    w = np.sqrt(k @ k + 4.0)
    assert ad.partial(lambda q: ad.sqrt(q @ q + 4.0), k, 0) == pytest.approx(0.3 / w, rel=1e-14)


def test_nested_tags_give_mixed_second_derivative():
    k = np.array([0.5, -0.2, 0.7])

    def f(q):
        return q[0] * q[0] * q[1]

    d01 = ad.partial(lambda q: ad.partial(f, q, 0), k, 1)
    assert ad.value(d01) == pytest.approx(2 * k[0])


def test_matrix_valued_functions():
    k = np.array([0.1, 0.2, 0.3])
    M = np.array([[1.0, 2.0], [3.0, 4.0]])
    d = ad.partial(lambda q: M * q[2] * q[2], k, 2)
    np.testing.assert_allclose(d, 2 * k[2] * M)


def test_gradient_length():
    assert len(ad.gradient(_f, np.zeros(3))) == 3
