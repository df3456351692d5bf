import warnings

import numpy as np
import pytest

from rcqm import planewave as pw
from rcqm import tables
from rcqm.evolution import transform_rep


@pytest.mark.parametrize("N", [4, 8, 12, 16])
def test_printed_spinors_equal_constructed(N, rng):
    k = rng.normal(size=3)
    a, b = pw.dirac_spinors(N, k, 1.0), pw.dirac_spinors(N, k, 1.0, "constructed")
    np.testing.assert_allclose(a.minus, b.minus, atol=1e-14)
    np.testing.assert_allclose(a.plus, b.plus, atol=1e-14)


@pytest.mark.parametrize("N", [4, 8, 12, 16])
def test_spinor_basis(N):
    ks = np.random.default_rng(0).normal(size=(20, 3))
    assert pw.check_spinor_basis(N, 1.0, ks).passed


def test_positive_spinor_is_h_eigenvector(rng):
    from rcqm.transitions import dirac_hamiltonian
    k = rng.normal(size=3)
    w = np.sqrt(k @ k + 1)
    b = pw.dirac_spinors(8, k, 1.0)
    H = dirac_hamiltonian(8, k, 1.0)
    np.testing.assert_allclose(H @ b.minus, w * b.minus, atol=1e-13)


@pytest.mark.parametrize("rid", sorted(tables.EIGEN_TABLES))
def test_eigen_tables(rid):
    rep = pw.spin_eigen_suite(rid)
    assert rep.passed, rep.failures()


def test_unknown_eigen_table():
    with pytest.raises(ValueError):
        pw.spin_eigen_suite("nope")


def test_helicity_check():
    from rcqm.spin_algebra import NAMED_CONFIGS, multiplet_spin
    cfg = NAMED_CONFIGS["1,0"]
    assert pw.helicity_check(multiplet_spin(cfg), [0.1, 0.2, 0.3], config=cfg).passed
    with pytest.raises(ValueError):
        pw.helicity_check(multiplet_spin(cfg), [0, 0, 0])


def test_flip_k_involution(rng):
    a = rng.normal(size=(2, 6, 5))
    np.testing.assert_array_equal(pw.flip_k(pw.flip_k(a)), a)
    assert pw.flip_k(a)[0, 1, 0] == a[0, 5, 0]


@pytest.mark.parametrize("rep", ["fw", "dirac"])
def test_direct_and_mapped_synthesis_agree(rep):
    dims, box = (64,), (20.0,)
    a = pw.synthesize_solution("1/2,1/2", rep, "gaussian", dims, box)
    b = pw.synthesize_solution("1/2,1/2", rep, "gaussian", dims, box, direct=True)
    np.testing.assert_allclose(a.data, b.data, atol=1e-12)


def test_synthesis_matches_transform():
    dims, box = (32, 24), (12.0, 9.0)
    f = pw.synthesize_solution("1,0,1,0", "rcqm", "gaussian", dims, box)
    d = pw.synthesize_solution("1,0,1,0", "dirac", "gaussian", dims, box)
    np.testing.assert_allclose(transform_rep(f, "rcqm", "dirac", 8, 1.0).data, d.data, atol=1e-12)


def test_aliasing_warning():
    dims, box = (16,), (4.0,)
    with pytest.warns(UserWarning):
        st = pw.synthesize_solution("1/2", "rcqm", lambda K: np.ones((2, 16)), dims, box)
    assert st.meta["aliasing_fraction"] > 0


def test_bad_amplitudes():
    with pytest.raises(ValueError):
        pw.synthesize_solution("1/2", "rcqm", np.ones((3, 8)), (8,), (1.0,))
    with pytest.raises(ValueError), warnings.catch_warnings():
        warnings.simplefilter("ignore")
        pw.synthesize_solution("1/2", "nope", "gaussian", (8,), (10.0,))
