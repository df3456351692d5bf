import numpy as np
import pytest

from rcqm import kspace_ops as ko
from rcqm.grid import GridState, positions


def test_sqrt_series_oracle():
    np.testing.assert_allclose(ko.sqrt_series_coefficients(4), [1, 0.5, -0.125, 0.0625, -5 / 128])


def test_series_converges_below_mass():
    k = np.array([0.3, 0.1, 0.2])
    assert ko.sqrt_series_symbol(k, 1.0, 30) == pytest.approx(ko.omega(k, 1.0), rel=1e-14)


def test_sqrt_operator_on_mode():
    n, L = 16, 2 * np.pi
    x = positions((n,), (L,))[0]
    st = GridState(np.exp(2j * x)[None], L)
    out = ko.apply_sqrt_operator(st, 1.5)
    np.testing.assert_allclose(out.data, np.sqrt(4 + 2.25) * st.data, atol=1e-13)


def test_omega_rejects_negative_mass():
    with pytest.raises(ValueError):
        ko.omega(np.zeros(3), -1.0)


def test_poincare_rhs_samples():
    assert ko.poincare_rhs("p1", "p2") == {}
    # rotations: [j12, j23] = i j31, like [s3, s1] = i s2
    assert ko.poincare_rhs("j12", "j23") == {"j31": 1j}


@pytest.mark.parametrize("cfg", ["1/2", "1,0", "3/2,3/2"])
def test_rcqm_poincare(cfg):
    g = ko.rcqm_generators(cfg, 1.0)
    assert ko.check_poincare(g, samples=5).passed


def test_fw_and_dirac_poincare():
    assert ko.check_poincare(ko.fw_generators("1/2,1/2", 1.0), samples=5).passed
    assert ko.check_poincare(ko.dirac_generators(8, None, 1.0), samples=5).passed


def test_local_dirac_generators_cross_check():
    assert ko.check_poincare(ko.dirac_local_generators(1.0), samples=5).passed


def test_poincare_at_nonzero_time():
    g = ko.rcqm_generators("1", 1.0, t=2.5)
    assert ko.check_poincare(g, samples=4).passed


def test_mutated_breve_sign_fails():
    g = ko.rcqm_generators("1/2", 1.0, breve_sign=+1)
    assert not ko.check_poincare(g, samples=3).passed


def test_pauli_lubanski_and_mass():
    for g in (ko.rcqm_generators("1", 1.0), ko.dirac_generators(4, None, 1.0)):
        assert ko.pauli_lubanski_check(g).passed
        assert ko.mass_casimir_check(g).passed


def test_fw_needs_paired_config():
    with pytest.raises(ValueError):
        ko.fw_generators("1", 1.0)
    with pytest.raises(ValueError):
        ko.rcqm_generators("1", 0.0)


def test_packet_gradient_closed_form(rng):
    from rcqm import autodiff as ad
    p = ko.TestPacket.random(2, rng)
    k = p.center + 0.3
    for l in range(3):
        np.testing.assert_allclose(ad.partial(p, k, l), p.gradient(k)[l], atol=1e-12)


def test_sample_momenta_in_ball(rng):
    ks = ko.sample_momenta(200, 2.0, rng)
    assert np.all(np.linalg.norm(ks, axis=1) <= 20.0)
