"""Cartesian orts, covariant spinor bases, eigenvalue tables and solution synthesis."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import tables
from .grid import GridState, from_kspace, to_kspace, wavevectors
from .report import VerificationReport
from .rlinear import apply as rl_apply, v_operator
from .spin_algebra import NAMED_CONFIGS, SpinConfig, SpinTriple, multiplet_spin
from .transitions import dirac_spin_computed, fw_spin, gammas, vminus_matrix, vplus_matrix


def cartesian_orts(N: int) -> np.ndarray:
    """Columns ``d_1 .. d_N`` of the identity."""
    if N < 1:
        raise ValueError("N must be positive")
    return np.eye(N, dtype=complex)


@dataclass(frozen=True)
class SpinorBasis:
    """Covariant spinors at ``k`` as columns.

    ``minus`` holds the first N/2 spinors and ``plus`` the rest.  The
    positive-frequency family multiplies ``e^{-ik.x}``-type modes of
    momentum ``-k``, so the orthonormal and complete set is ``minus(k)``
    together with ``plus(-k)``, stored as ``plus_reflected``.
    """

    minus: np.ndarray
    plus: np.ndarray
    plus_reflected: np.ndarray
    k: np.ndarray
    m: float

    @property
    def vectors(self) -> np.ndarray:
        return np.hstack([self.minus, self.plus])

    @property
    def mode_vectors(self) -> np.ndarray:
        return np.hstack([self.minus, self.plus_reflected])

    @property
    def normalization(self) -> float:
        w = float(np.sqrt(self.k @ self.k + self.m ** 2))
        return 1.0 / np.sqrt(2 * w * (w + self.m))

    def family_residual(self) -> float:
        """Largest deviation of ``v_a^dagger v_b`` from ``delta_ab`` within each family."""
        return max(float(np.max(np.abs(F.conj().T @ F - np.eye(F.shape[1])))) for F in (self.minus, self.plus))

    def orthonormality_residual(self) -> float:
        V = self.mode_vectors
        return max(self.family_residual(), float(np.max(np.abs(V.conj().T @ V - np.eye(V.shape[1])))))

    def completeness_residual(self) -> float:
        V = self.mode_vectors
        return float(np.max(np.abs(V @ V.conj().T - np.eye(V.shape[0]))))


def _spinor_columns(N: int, k: np.ndarray, m: float, source: str) -> np.ndarray:
    h = N // 2
    if source == "printed":
        cols = [tables.printed_spinor(N, fam, lab, k, m) for fam, lab in tables.spinor_labels(N)]
        return np.stack(cols, axis=1)
    if source == "constructed":
        return np.hstack([vminus_matrix(N, k, m)[:, :h], vplus_matrix(N, k, m)[:, h:]])
    raise ValueError(f"unknown spinor source {source!r}")


def dirac_spinors(N: int, k, m: float, source: str = "printed") -> SpinorBasis:
    """Printed spinors, or ``V-(k) d_A`` and ``V+(k) d_B`` when ``source="constructed"``."""
    if N not in tables.PRINTED_SPINORS:
        raise ValueError(f"N must be 4, 8, 12 or 16, got {N}")
    if m <= 0:
        raise ValueError("mass must be positive")
    k = np.asarray(k, dtype=float)
    h = N // 2
    V = _spinor_columns(N, k, m, source)
    R = _spinor_columns(N, -k, m, source)
    return SpinorBasis(V[:, :h], V[:, h:], R[:, h:], k, float(m))


def spinor_errata(N: int, m: float = 1.0, n_samples: int = 20, seed: int = 0, tol: float = 1e-12) -> list[dict]:
    """Spinor columns whose printed form differs from the constructed one."""
    rng = np.random.default_rng(seed)
    worst: dict[int, float] = {}
    for _ in range(n_samples):
        k = rng.uniform(-3 * m, 3 * m, size=3)
        d = np.max(np.abs(dirac_spinors(N, k, m).vectors - dirac_spinors(N, k, m, "constructed").vectors), axis=0)
        for j in np.nonzero(d > tol)[0]:
            worst[int(j)] = max(worst.get(int(j), 0.0), float(d[j]))
    labels = tables.spinor_labels(N)
    return [{"table": f"spinors_{N}", "family": labels[j][0], "label": labels[j][1], "abs_diff": d}
            for j, d in sorted(worst.items())]


def check_spinor_basis(N: int, m: float, samples, tol: float = 1e-12) -> VerificationReport:
    rep = VerificationReport(f"spinors/N{N}")
    ortho = compl = diff = ident = 0.0
    for k in np.atleast_2d(samples):
        b = dirac_spinors(N, k, m)
        ortho = max(ortho, b.orthonormality_residual())
        compl = max(compl, b.completeness_residual())
        diff = max(diff, float(np.max(np.abs(b.vectors - dirac_spinors(N, k, m, "constructed").vectors))))
        w = np.sqrt(k @ k + m * m)
        ident = max(ident, abs((w + m) ** 2 + k @ k - 2 * w * (w + m)) / (w * w))
    rep.add("orthonormality", ortho, tol, anchor="spinors are orthonormal (plus family at -k)")
    rep.add("completeness", compl, tol, anchor="spinors are complete")
    rep.add("printed_equals_constructed", diff, tol, anchor="printed spinors equal V applied to the orts")
    rep.add("normalization_identity", ident, tol, anchor="(w+m)^2 + k^2 = 2w(w+m)")
    return rep


def _config(name: str) -> SpinConfig:
    return NAMED_CONFIGS[name] if name in NAMED_CONFIGS else SpinConfig.parse(name)


def spin_eigen_suite(rep_id: str, tol: float = 1e-10, m: float = 1.0, k=None, seed: int = 0) -> VerificationReport:
    """Residual ``|s^3 x - lambda x|`` for every row of one eigenvalue table."""
    if rep_id not in tables.EIGEN_TABLES:
        raise ValueError(f"unknown eigenvalue table {rep_id!r}")
    kind, cfg, values = tables.EIGEN_TABLES[rep_id]
    config = _config(cfg)
    N = config.dim
    if len(values) != N:
        raise ValueError(f"table {rep_id} has {len(values)} rows for dimension {N}")
    rep = VerificationReport(f"eigen/{rep_id}")
    if kind in ("rcqm", "fw"):
        s3 = (multiplet_spin(config) if kind == "rcqm" else fw_spin(config))[2]
        vecs = [(s3, d) for d in cartesian_orts(N).T]
    else:
        if k is None:
            k = np.random.default_rng(seed).uniform(-2 * m, 2 * m, size=3)
        k = np.asarray(k, dtype=float)
        s_D = dirac_spin_computed(N, config, m)
        s_minus, s_plus = s_D(k)[2], s_D(-k)[2]
        basis = dirac_spinors(N, k, m)
        vecs = [(s_minus, x) for x in basis.minus.T] + [(s_plus, x) for x in basis.plus.T]
    for i, ((s3, x), lam) in enumerate(zip(vecs, values), start=1):
        res = float(np.max(np.abs(s3 @ x - float(lam) * x)))
        rep.add(f"row{i}", res, tol, anchor=f"s3 x_{i} = {lam} x_{i}")
    return rep


def helicity_check(S: SpinTriple | list, k, tol: float = 1e-12, config: SpinConfig | None = None) -> VerificationReport:
    """Eigenvalues of ``s.k/|k|`` against ``{s, ..., -s}`` per block (or the spectrum of ``s^3``)."""
    k = np.asarray(k, dtype=float)
    nk = float(np.linalg.norm(k))
    if nk == 0:
        raise ValueError("helicity is undefined at k = 0")
    S = list(S)
    h = sum(kj / nk * s for kj, s in zip(k, S))
    got = np.sort(np.linalg.eigvalsh(h))
    if config is not None:
        expected = np.sort([ts / 2 - j for ts, _ in config.entries for j in range(ts + 1)])
    else:
        expected = np.sort(np.linalg.eigvalsh(S[2]))
    rep = VerificationReport("helicity")
    rep.add("spectrum", float(np.max(np.abs(got - expected))), tol, anchor="helicity spectrum per spin block")
    return rep


# -- solution synthesis --------------------------------------------------------

def flip_k(a: np.ndarray) -> np.ndarray:
    """Reindex lattice amplitudes ``a(k) -> a(-k)`` on the FFT ordering (axes 1..)."""
    axes = tuple(range(1, a.ndim))
    return np.roll(np.flip(a, axis=axes), 1, axis=axes)


def gaussian_amplitudes(N: int, dims, box, k0=(0.0, 0.0, 0.0), width: float = 1.0,
                        weights=None) -> np.ndarray:
    """Gaussian amplitude preset centred at ``k0``; ``weights`` spread it over components."""
    K = wavevectors(dims, box)
    k0 = np.asarray(k0, dtype=float).reshape(3, *([1] * len(dims)))
    env = np.exp(-np.sum((K - k0) ** 2, axis=0) / (2 * width ** 2))
    w = np.ones(N, dtype=complex) / np.sqrt(N) if weights is None else np.asarray(weights, dtype=complex)
    return w.reshape(N, *([1] * len(dims))) * env


def _amplitudes(amplitude_fn, N: int, dims, box) -> np.ndarray:
    if isinstance(amplitude_fn, str):
        if amplitude_fn != "gaussian":
            raise ValueError(f"unknown amplitude preset {amplitude_fn!r}")
        return gaussian_amplitudes(N, dims, box)
    if callable(amplitude_fn):
        a = np.asarray(amplitude_fn(wavevectors(dims, box)), dtype=complex)
    else:
        a = np.asarray(amplitude_fn, dtype=complex)
    if a.shape != (N, *dims):
        raise ValueError(f"amplitudes must have shape {(N, *dims)}, got {a.shape}")
    return a


def _aliasing_fraction(a: np.ndarray, dims, box) -> float:
    K = wavevectors(dims, box)
    kny = [np.pi * n / L for n, L in zip(dims, box)]
    near = np.zeros(dims, dtype=bool)
    for j, (n, kn) in enumerate(zip(dims, kny)):
        if n > 1:
            near |= np.abs(K[j]) > 0.8 * kn
    total = float(np.sum(np.abs(a) ** 2))
    return float(np.sum(np.abs(a[:, near]) ** 2)) / total if total > 0 else 0.0


def kspace_operator(N: int, K: np.ndarray, fn: Callable) -> np.ndarray:
    """Evaluate a per-mode ``N x N`` matrix function over a lattice: shape ``(N, N, *dims)``."""
    flat = K.reshape(3, -1)
    out = np.empty((N, N, flat.shape[1]), dtype=complex)
    for i in range(flat.shape[1]):
        out[:, :, i] = fn(flat[:, i])
    return out.reshape(N, N, *K.shape[1:])


def transition_symbol(N: int, K: np.ndarray, m: float, sign: int) -> np.ndarray:
    """``V-`` (``sign=-1``) or ``V+`` (``sign=+1``) on every lattice mode, vectorized."""
    g = gammas(N)
    w = np.sqrt(np.sum(K * K, axis=0) + m * m)
    gk = np.einsum("jab,j...->ab...", np.stack(g[1:4]), K)
    eye = np.eye(N).reshape(N, N, *([1] * (K.ndim - 1)))
    return (eye * (w + m) + sign * gk) / np.sqrt(2 * w * (w + m))


def synthesize_solution(config: SpinConfig | str, rep: str, amplitude_fn, dims, box, m: float = 1.0,
                        direct: bool = False) -> GridState:
    """Time-zero state ``sum_k a(k) e^{ik.x}`` mapped into ``rep`` (``rcqm``, ``fw`` or ``dirac``).

    The default route builds the RCQM state and applies ``v`` (and ``V-`` per
    mode for ``dirac``); ``direct=True`` writes the canonical-field amplitudes
    directly, with the lower block conjugated and moved to ``-k``.
    """
    config = _config(config) if isinstance(config, str) else config
    N = config.dim
    dims = tuple(int(n) for n in dims)
    box = tuple(float(b) for b in np.broadcast_to(np.atleast_1d(box), (len(dims),)))
    a = _amplitudes(amplitude_fn, N, dims, box)
    flags = {}
    frac = _aliasing_fraction(a, dims, box)
    if frac > 1e-12:
        warnings.warn(f"amplitude support reaches the Nyquist band (fraction {frac:.2e})", stacklevel=2)
        flags["aliasing_fraction"] = frac
    if rep not in ("rcqm", "fw", "dirac"):
        raise ValueError(f"unknown representation {rep!r}")
    ncell = float(np.prod(dims))
    if rep == "rcqm":
        return GridState(from_kspace(a) * ncell, box, {"rep": "rcqm", **flags})
    if direct:
        h = N // 2
        b = a.copy()
        b[h:] = np.conj(flip_k(a[h:]))
        ft = b
    else:
        f = from_kspace(a) * ncell
        phi = rl_apply(v_operator(N), f)
        ft = to_kspace(phi) / ncell
    if rep == "dirac":
        ft = np.einsum("ab...,b...->a...", transition_symbol(N, wavevectors(dims, box), m, -1), ft)
    return GridState(from_kspace(ft) * ncell, box, {"rep": rep, **flags})
