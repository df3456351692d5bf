import numpy as np
import pytest

from rcqm import transitions as tr
from rcqm.kspace_ops import omega, sample_momenta


@pytest.fixture
def ks(rng):
    return sample_momenta(30, 1.0, rng)


def test_vminus_oracle_along_z():
    # k = (0, 0, 3/4), m = 1: w = 5/4, sqrt(2w(w+m)) = 3/2 * sqrt(5/2)
    k = np.array([0.0, 0.0, 0.75])
    V = tr.vminus_matrix(4, k, 1.0)
    d = np.sqrt(2 * 1.25 * 2.25)
    g3 = tr.gammas(4)[3]
    np.testing.assert_allclose(V, (2.25 * np.eye(4) - 0.75 * g3) / d, atol=1e-15)
    assert V[0, 0] == pytest.approx(2.25 / d)


@pytest.mark.parametrize("N", [4, 8, 12, 16])
def test_transition_identities(N, ks):
    rep = tr.check_transitions(N, 1.0, ks)
    assert rep.passed, rep.failures()


def test_k_zero_is_identity():
    np.testing.assert_allclose(tr.vminus_matrix(8, np.zeros(3), 2.0), np.eye(8))


def test_w_operator_round_trip(rng):
    k = rng.normal(size=3)
    W, Wi = tr.w_operator(8, k, 1.0), tr.w_inverse(8, k, 1.0)
    f = rng.normal(size=8) + 1j * rng.normal(size=8)
    np.testing.assert_allclose(Wi(W(f)), f, atol=1e-14)


@pytest.mark.parametrize("N", [4, 8, 12, 16])
def test_covariant_spin(N, ks):
    assert tr.check_dirac_spin(N, None, 1.0, ks).passed


def test_nonlocal_formula(ks):
    assert tr.check_nonlocal4(1.0, ks).passed
    # the opposite gradient sign is a different operator
    k = ks[0]
    a = tr.dirac_spin_nonlocal4(k, 1.0, grad_sign=-1)
    b = tr.dirac_spin_computed(4, None, 1.0)(k)
    assert max(np.max(np.abs(x - y)) for x, y in zip(a, b)) > 1e-3


def test_position_offset_gamma_spin(ks):
    d = tr.position_offset_diagnostic(8, 1.0, ks[:5])
    assert d["gamma_spin"] < 1e-12
    assert d["multiplet_spin"] > 1e-3


def test_errata_list_frozen():
    found = {(e["table"], e["component"], e["row"], e["col"])
             for tid in ("s8_vector", "s8_spin32", "s16_third") for e in tr.errata_diff(tid)}
    expected = {
        ("s8_vector", 1, 1, 7), ("s8_vector", 2, 1, 1), ("s8_vector", 2, 1, 2),
        ("s8_spin32", 1, 3, 5), ("s8_spin32", 1, 3, 7), ("s8_spin32", 1, 5, 1), ("s8_spin32", 1, 7, 5),
        ("s8_spin32", 1, 7, 6), ("s8_spin32", 2, 1, 3), ("s8_spin32", 2, 2, 2), ("s8_spin32", 2, 5, 3),
        ("s16_third", 3, 4, 4),
    }
    assert found == expected


def test_printed_table_validation():
    with pytest.raises(ValueError):
        tr.dirac_spin_paper("nope", np.zeros(3), 1.0)
    with pytest.raises(ValueError):
        tr.dirac_spin_paper("s8_vector", np.zeros(3), 0.0)


def test_printed_tables_mostly_agree(rng):
    # every element outside the errata list matches the oracle
    k = rng.uniform(-2, 2, size=3)
    printed = tr.dirac_spin_paper("s8_vector", k, 1.0)
    computed = tr.dirac_spin_computed(8, "1,0,1,0", 1.0)(k)
    bad = {(j, r + 1, c + 1) for j, P in printed.items()
           for r, c in zip(*np.nonzero(np.abs(P - computed[j - 1]) > 1e-10))}
    assert bad <= {(1, 1, 7), (2, 1, 1), (2, 1, 2)}
    assert omega(k, 1.0) > 1.0
