import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rcqm.spin_algebra import (
    ANTIPARTICLE, NAMED_CONFIGS, PARTICLE, SpinConfig, casimir_blocks, casimir_spin, charge_sign,
    charge_sign_is_conventional, check_su2, helicity_eigenvalues, multiplet_spin, su2_generators, su2_residual,
)


def test_spin_one_oracle():
    s1, s2, s3 = su2_generators(2)
    r = 1 / np.sqrt(2)
    np.testing.assert_allclose(s1, [[0, r, 0], [r, 0, r], [0, r, 0]], atol=1e-15)
    np.testing.assert_allclose(s3, np.diag([1, 0, -1]))
    np.testing.assert_allclose(s2, [[0, -1j * r, 0], [1j * r, 0, -1j * r], [0, 1j * r, 0]], atol=1e-15)


@given(st.integers(min_value=0, max_value=12))
def test_su2_and_casimir_for_any_spin(ts):
    S = su2_generators(ts)
    assert su2_residual(S) < 1e-12
    s = ts / 2
    np.testing.assert_allclose(casimir_spin(S), s * (s + 1) * np.eye(ts + 1), atol=1e-12)


@settings(max_examples=30)
@given(st.lists(st.tuples(st.integers(0, 5), st.sampled_from([PARTICLE, ANTIPARTICLE])), min_size=1, max_size=4))
def test_multiplet_su2_any_config(entries):
    cfg = SpinConfig(tuple(entries))
    S = multiplet_spin(cfg)
    assert S.dim == cfg.dim
    assert su2_residual(S) < 1e-12
    np.testing.assert_allclose(casimir_spin(S), casimir_blocks(cfg), atol=1e-12)


@pytest.mark.parametrize("text,label", [
    ("1/2", "1/2+"), ("1/2,1/2", "1/2+,1/2-"), ("1,0", "1+,0+"), ("1,0,1,0", "1+,0+,1-,0-"), ("1+,1+", "1+,1+"),
])
def test_parse_labels(text, label):
    assert SpinConfig.parse(text).label() == label


@pytest.mark.parametrize("bad", ["", "1/3", "x", "1+,1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        SpinConfig.parse(bad)


def test_antiparticle_block_is_negated_conjugate():
    S = multiplet_spin(SpinConfig.doublet(1))
    half = su2_generators(1)
    for s, h in zip(S, half):
        np.testing.assert_allclose(s[2:, 2:], -h.conj())


def test_charge_sign():
    cfg = NAMED_CONFIGS["1,0,1,0"]
    np.testing.assert_array_equal(np.diag(charge_sign(cfg)).real, [-1] * 4 + [1] * 4)
    assert not charge_sign_is_conventional(cfg)
    assert charge_sign_is_conventional(NAMED_CONFIGS["1"])


def test_helicity_spectrum():
    h = helicity_eigenvalues(su2_generators(3), [0.3, -1.0, 2.0])
    np.testing.assert_allclose(h, [1.5, 0.5, -0.5, -1.5], atol=1e-12)
    with pytest.raises(ValueError):
        helicity_eigenvalues(su2_generators(1), [0, 0, 0])


def test_check_su2_detects_mutation():
    S = list(su2_generators(2))
    S[0] = S[0] * 1.01
    assert not check_su2(S).passed
