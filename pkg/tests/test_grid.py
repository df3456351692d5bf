import numpy as np
import pytest

from rcqm.grid import GridState, apply_multiplier, default_workers, from_kspace, positions, to_kspace, wavevectors


def test_state_validation():
    with pytest.raises(ValueError):
        GridState(np.zeros(4), 1.0)
    with pytest.raises(ValueError):
        GridState(np.zeros((2, 4)), (1.0, 2.0))
    with pytest.raises(ValueError):
        GridState(np.full((2, 4), np.nan), 1.0)
    assert GridState(np.zeros((2, 4, 4)), 3.0).box == (3.0, 3.0)


def test_norm_of_constant_state():
    st = GridState(np.ones((2, 8)), 4.0)
    assert st.norm() == pytest.approx(2 * 4.0)


def test_fft_round_trip(rng):
    a = rng.normal(size=(3, 8, 6)) + 1j * rng.normal(size=(3, 8, 6))
    np.testing.assert_allclose(from_kspace(to_kspace(a)), a, atol=1e-14)


def test_wavevectors_lattice():
    K = wavevectors((4,), (2 * np.pi,))
    np.testing.assert_allclose(K[0], [0, 1, -2, -1])
    assert not K[1:].any()
    assert positions((4,), (2.0,))[0][1] == 0.5


def test_multiplier_derivative():
    n, L = 32, 2 * np.pi
    x = positions((n,), (L,))[0]
    st = GridState(np.sin(3 * x)[None], L)
    out = apply_multiplier(st, 1j * st.wavevectors()[0])
    np.testing.assert_allclose(out.data[0].real, 3 * np.cos(3 * x), atol=1e-12)


def test_thread_env(monkeypatch):
    monkeypatch.setenv("RCQM_THREADS", "2")
    assert default_workers() == 2
    monkeypatch.setenv("RCQM_THREADS", "0")
    with pytest.raises(ValueError):
        default_workers()
    monkeypatch.delenv("RCQM_THREADS")
    assert default_workers() is None
