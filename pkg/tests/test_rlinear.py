import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rcqm.rlinear import RLinearOp, adjoint, apply, compose, conjugate_generator, is_antihermitian, v_operator


def _rand_op(rng, n):
    return RLinearOp(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)),
                     rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))


@settings(max_examples=25)
@given(st.integers(0, 2 ** 31), st.integers(1, 6))
def test_compose_matches_sequential_application(seed, n):
    rng = np.random.default_rng(seed)
    a, b = _rand_op(rng, n), _rand_op(rng, n)
    f = rng.normal(size=n) + 1j * rng.normal(size=n)
    np.testing.assert_allclose(apply(compose(a, b), f), apply(a, apply(b, f)), atol=1e-10)


@settings(max_examples=25)
@given(st.integers(0, 2 ** 31), st.integers(1, 6))
def test_adjoint_for_real_inner_product(seed, n):
    rng = np.random.default_rng(seed)
    a = _rand_op(rng, n)
    f = rng.normal(size=n) + 1j * rng.normal(size=n)
    g = rng.normal(size=n) + 1j * rng.normal(size=n)
    lhs = np.real(np.vdot(g, apply(a, f)))
    rhs = np.real(np.vdot(apply(adjoint(a), g), f))
    assert lhs == pytest.approx(rhs, abs=1e-9)


@pytest.mark.parametrize("N", [2, 4, 8, 12, 16])
def test_v_is_involution(N):
    v = v_operator(N)
    assert compose(v, v).distance(RLinearOp.identity(N)) == 0.0


def test_v_rejects_odd_dimension():
    with pytest.raises(ValueError):
        v_operator(3)


def test_v_acts_on_grid_axes(rng):
    f = rng.normal(size=(4, 5)) + 1j * rng.normal(size=(4, 5))
    out = apply(v_operator(4), f)
    np.testing.assert_array_equal(out[:2], f[:2])
    np.testing.assert_array_equal(out[2:], f[2:].conj())


def test_conjugate_generator_rejects_hermitian():
    q = RLinearOp.from_linear(np.diag([1.0, 2.0]))
    assert not is_antihermitian(q)
    with pytest.raises(ValueError):
        conjugate_generator(v_operator(2), q)


def test_conjugate_generator_preserves_antihermitian():
    q = RLinearOp.from_linear(1j * np.diag([1.0, -2.0]))
    out = conjugate_generator(v_operator(2), q)
    assert is_antihermitian(out)
    np.testing.assert_allclose(out.linear, np.diag([1j, 2j]))


def test_complex_scale_rejected():
    with pytest.raises(ValueError):
        RLinearOp.identity(2).scale(1j)
