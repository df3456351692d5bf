import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rcqm import evolution as ev
from rcqm.grid import GridState, positions
from rcqm.spin_algebra import NAMED_CONFIGS


def _mode(N, n=16, L=2 * np.pi, j=3, comp=0):
    x = positions((n,), (L,))[0]
    data = np.zeros((N, n), dtype=complex)
    data[comp] = np.exp(1j * j * x)
    return GridState(data, L)


def test_sf_single_mode_phase():
    st = _mode(2)
    out = ev.evolve_sf(st, 1.0, 0.7)
    np.testing.assert_allclose(out.data, np.exp(-1j * np.sqrt(10) * 0.7) * st.data, atol=1e-14)


def test_fw_lower_block_phase():
    st = _mode(4, comp=3)
    out = ev.evolve_fw(st, 4, 1.0, 0.7)
    np.testing.assert_allclose(out.data, np.exp(1j * np.sqrt(10) * 0.7) * st.data, atol=1e-14)


def test_dirac_k_zero_mode():
    st = GridState(np.ones((4, 8), dtype=complex), 5.0)
    out = ev.evolve_dirac(st, 4, 2.0, 0.3)
    np.testing.assert_allclose(out.data[:2], np.exp(-0.6j) * st.data[:2], atol=1e-14)
    np.testing.assert_allclose(out.data[2:], np.exp(0.6j) * st.data[2:], atol=1e-14)


@pytest.mark.parametrize("N", [4, 8, 12, 16])
def test_propagator_methods_agree(N, rng):
    K = rng.normal(size=(3, 5))
    a = ev.dirac_propagator(N, K, 1.0, 2.3)
    b = ev.dirac_propagator(N, K, 1.0, 2.3, "eig")
    np.testing.assert_allclose(a, b, atol=1e-12)


def test_positive_spinor_phase(rng):
    from rcqm.planewave import dirac_spinors
    k = rng.normal(size=3)
    v = dirac_spinors(8, k, 1.0).minus[:, 0]
    P = ev.dirac_propagator(8, k.reshape(3, 1), 1.0, 1.7)[:, :, 0]
    np.testing.assert_allclose(P @ v, np.exp(-1j * np.sqrt(k @ k + 1) * 1.7) * v, atol=1e-13)


def test_nonrel_k_zero_unchanged():
    st = GridState(np.ones((2, 8)), 3.0)
    np.testing.assert_allclose(ev.evolve_nonrel(st, 1.0, 5.0).data, st.data)
    with pytest.raises(ValueError):
        ev.evolve_nonrel(st, 0.0, 1.0)


def test_nonrel_error_bound():
    ks = np.array([0.01, 0.03, 0.05])
    err = ev.nonrel_phase_error(ks, 1.0, 10.0)
    assert np.all(err < ks ** 4 / 8 * 10.0 * (1 + 1e-6))


def test_nonrel_slope():
    assert abs(ev.nonrel_slope() - 4.0) < 0.1


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2 ** 31), st.sampled_from(["rcqm", "fw", "dirac"]), st.floats(-50, 50))
def test_unitarity(seed, rep, t):
    rng = np.random.default_rng(seed)
    st0 = ev.random_state(4, (16,), (10.0,), rng)
    out = ev.evolve_rep(st0, rep, 1.0, t)
    assert out.norm() == pytest.approx(st0.norm(), rel=1e-13)


@pytest.mark.parametrize("frm,to", [("rcqm", "fw"), ("fw", "dirac"), ("rcqm", "dirac")])
def test_round_trips(frm, to, rng):
    st0 = ev.random_state(8, (8, 8), (6.0, 6.0), rng)
    back = ev.transform_rep(ev.transform_rep(st0, frm, to, 8, 1.0), to, frm, 8, 1.0)
    np.testing.assert_allclose(back.data, st0.data, atol=1e-12)


def test_transform_dimension_mismatch(rng):
    st0 = ev.random_state(4, (8,), (6.0,), rng)
    with pytest.raises(ValueError):
        ev.transform_rep(st0, "rcqm", "dirac", 8, 1.0)


def test_zero_state_maps_to_zero():
    z = GridState(np.zeros((4, 8)), 2.0)
    assert not ev.transform_rep(z, "rcqm", "dirac", 4, 1.0).data.any()


def test_mean_values_single_mode():
    st = _mode(2)
    st = st.with_data(st.data / np.sqrt(st.norm()))
    mv = ev.mean_values(st, 1.0, "rcqm", NAMED_CONFIGS["1/2"])
    assert mv["norm"] == pytest.approx(1.0)
    assert mv["P0"] == pytest.approx(np.sqrt(10))
    assert mv["P1"] == pytest.approx(3.0)
    assert mv["mean_s3"] == pytest.approx(0.5)


def test_standing_wave_has_zero_momentum():
    x = positions((32,), (2 * np.pi,))[0]
    st = GridState(np.stack([np.cos(2 * x), np.cos(2 * x)]), 2 * np.pi)
    assert ev.mean_values(st, 1.0)["P1"] == pytest.approx(0.0, abs=1e-12)


def test_cross_rep_equivalence(rng):
    st0 = ev.random_state(8, (64,), (40.0,), rng, kmax=3.0)
    rep = ev.cross_rep_equivalence(st0, 8, 1.0, 20.0)
    assert rep.passed, rep.failures()
    assert ev.cross_rep_equivalence(st0, 8, 1.0, 0.0).max_residual < 1e-14


def test_conserved_log(tmp_path, rng):
    st0 = ev.random_state(2, (32,), (10.0,), rng)
    log = ev.ConservedLog()
    for t in (0.0, 1.0, 2.0):
        log.add(t, ev.mean_values(ev.evolve_sf(st0, 1.0, t), 1.0, "rcqm", NAMED_CONFIGS["1/2"]))
    assert log.drift("P0") < 1e-12 and log.positive_energy(1.0)
    log.to_csv(tmp_path / "log.csv")
    head = (tmp_path / "log.csv").read_text().splitlines()[0]
    assert head == "t,norm,P0,P1,P2,P3,mean_s3"
