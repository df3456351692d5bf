import numpy as np
import pytest

from rcqm import clifford
from rcqm.rlinear import RLinearOp


def test_standard_anticommutators():
    assert clifford.check_clifford(clifford.standard_gammas()).passed


def test_five_product_is_minus_identity():
    g = clifford.standard_gammas().matrices
    np.testing.assert_array_equal(g[0] @ g[1] @ g[2] @ g[3] @ g[4], -np.eye(4))


def test_qm_gammas_are_v_conjugates():
    for a, b in zip(clifford.qm_gammas().matrices, clifford.v_conjugated_gammas()):
        assert clifford.distance(a, b) == 0.0


@pytest.mark.parametrize("rep", ["standard", "qm"])
def test_extended_algebra(rep):
    r = clifford.check_extended(rep)
    assert r.passed, r.failures()


@pytest.mark.parametrize("N", [8, 12, 16])
def test_big_gammas(N):
    gs = clifford.big_gammas(N)
    assert gs.dim == N
    assert clifford.check_clifford(gs).passed


def test_wrong_metric_fails():
    r = clifford.check_clifford(clifford.standard_gammas(), metric=(1, 1, 1, 1, 1))
    assert not r.passed


def test_spin_from_gammas_rejects_antilinear():
    with pytest.raises(ValueError):
        clifford.spin_from_gammas(clifford.qm_gammas().matrices[1:4])


def test_rotation_triple_is_su2_like():
    q = clifford.rotation_triple(clifford.qm_gammas().matrices[1:4])
    assert clifford.rotation_residual(q) < 1e-14


def test_pauli_blocks_rejects_unknown():
    with pytest.raises(ValueError):
        clifford.pauli_blocks(6)
