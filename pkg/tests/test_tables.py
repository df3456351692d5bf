import numpy as np
import pytest

from rcqm import tables


@pytest.mark.parametrize("text,value", [
    ("0", 0), ("1", 1), ("-1", -1), ("{ -1}", -1), ("i", 1j), ("-i", -1j),
    ("2i", 2j), ("\\sqrt{3}", np.sqrt(3)), ("-\\sqrt{6}", -np.sqrt(6)), ("-i\\sqrt{2}", -1j * np.sqrt(2)),
])
def test_parse_entry(text, value):
    assert tables.parse_entry(text) == pytest.approx(value)


def test_parse_entry_rejects_garbage():
    with pytest.raises(ValueError):
        tables.parse_entry("x+1")


def test_parse_matrix_with_prefactor():
    M = tables.parse_matrix("[[ 0 & 1 ; 1 & 0 ]]", 0.5)
    np.testing.assert_array_equal(M, [[0, 0.5], [0.5, 0]])


def test_spin_half_is_pauli_over_two():
    s1, s2, s3 = tables.printed_spin("1/2")
    np.testing.assert_allclose(s1, [[0, 0.5], [0.5, 0]])
    np.testing.assert_allclose(s2, [[0, -0.5j], [0.5j, 0]])
    np.testing.assert_allclose(s3, [[0.5, 0], [0, -0.5]])


def test_mirrored_blocks():
    S = tables.printed_spin("1/2,1/2")
    half = tables.printed_spin("1/2")
    for s, h in zip(S, half):
        np.testing.assert_array_equal(s[:2, :2], h)
        np.testing.assert_array_equal(s[2:, 2:], -h.conj())


def test_casimir_dimensions_match_spins():
    for name in tables.PRINTED_CASIMIR:
        assert tables.printed_casimir(name).shape == tables.printed_spin(name)[0].shape


def test_table_matrix_shapes():
    for tid, (N, _, comps) in tables.COVARIANT_TABLES.items():
        for j in comps:
            assert tables.table_matrix(tid, j, np.array([0.3, -0.2, 0.5]), 1.0).shape == (N, N)


def test_eigen_table_lengths():
    from rcqm.spin_algebra import NAMED_CONFIGS
    for rid, (kind, cfg, values) in tables.EIGEN_TABLES.items():
        assert len(values) == NAMED_CONFIGS[cfg].dim, rid


def test_spinor_labels_cover_dimension():
    for N in (4, 8, 12, 16):
        assert len(tables.spinor_labels(N)) == N
