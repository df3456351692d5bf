"""Exact spectral propagators, representation changes and conserved mean values."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .grid import GridState, from_kspace, to_kspace
from .planewave import transition_symbol
from .report import VerificationReport
from .rlinear import apply as rl_apply, v_operator
from .spin_algebra import SpinConfig, multiplet_spin
from .transitions import fw_spin, gammas

REPS = ("rcqm", "fw", "dirac")


def _omega(state: GridState, m: float) -> np.ndarray:
    if m < 0:
        raise ValueError("mass must be nonnegative")
    K = state.wavevectors()
    return np.sqrt(np.sum(K * K, axis=0) + m * m)


def _scalar_multiply(state: GridState, symbol: np.ndarray) -> GridState:
    return state.with_data(from_kspace(to_kspace(state.data) * symbol))


def _matrix_multiply(state: GridState, symbol: np.ndarray) -> GridState:
    ft = np.einsum("ab...,b...->a...", symbol, to_kspace(state.data))
    return state.with_data(from_kspace(ft))


def _check_dim(state: GridState, N: int) -> None:
    if state.ncomp != N:
        raise ValueError(f"state has {state.ncomp} components, expected {N}")


def evolve_sf(state: GridState, m: float, t: float) -> GridState:
    """Every mode times ``exp(-i w t)``."""
    return _scalar_multiply(state, np.exp(-1j * _omega(state, m) * t))


def evolve_fw(state: GridState, N: int, m: float, t: float) -> GridState:
    """``exp(-i G0 w t)``: upper block ``exp(-i w t)``, lower block ``exp(+i w t)``."""
    _check_dim(state, N)
    h = N // 2
    phase = np.exp(-1j * _omega(state, m) * t)
    ft = to_kspace(state.data)
    ft[:h] *= phase
    ft[h:] *= phase.conj()
    return state.with_data(from_kspace(ft))


def dirac_hamiltonian_symbol(N: int, K: np.ndarray, m: float) -> np.ndarray:
    """``G0 (G.k + m)`` on every lattice mode, shape ``(N, N, *dims)``."""
    g = gammas(N)
    gk = np.einsum("jab,j...->ab...", np.stack(g[1:4]), K)
    eye = np.eye(N).reshape(N, N, *([1] * (K.ndim - 1)))
    return np.einsum("ab,bc...->ac...", g[0], gk + m * eye)


def dirac_propagator(N: int, K: np.ndarray, m: float, t: float, method: str = "factorized") -> np.ndarray:
    """Per-mode ``exp(-i H(k) t)`` as ``V- exp(-i G0 w t) V+`` or by eigendecomposition."""
    if method == "factorized":
        w = np.sqrt(np.sum(K * K, axis=0) + m * m)
        h = N // 2
        d = np.concatenate([np.broadcast_to(np.exp(-1j * w * t), (h, *w.shape)),
                            np.broadcast_to(np.exp(1j * w * t), (h, *w.shape))])
        vm = transition_symbol(N, K, m, -1)
        vp = transition_symbol(N, K, m, +1)
        return np.einsum("ab...,b...,bc...->ac...", vm, d, vp)
    if method == "eig":
        H = dirac_hamiltonian_symbol(N, K, m)
        dims = H.shape[2:]
        Hm = np.moveaxis(H.reshape(N, N, -1), 2, 0)
        lam, U = np.linalg.eigh(Hm)
        P = np.einsum("mab,mb,mcb->mac", U, np.exp(-1j * lam * t), U.conj())
        return np.moveaxis(P, 0, 2).reshape(N, N, *dims)
    raise ValueError(f"unknown propagator method {method!r}")


def evolve_dirac(state: GridState, N: int, m: float, t: float, method: str = "factorized") -> GridState:
    _check_dim(state, N)
    if m <= 0 and method == "factorized":
        raise ValueError("the factorized propagator needs m > 0")
    return _matrix_multiply(state, dirac_propagator(N, state.wavevectors(), m, t, method))


def evolve_nonrel(state: GridState, m: float, t: float) -> GridState:
    """Every mode times ``exp(-i k^2 t / 2m)``."""
    if m <= 0:
        raise ValueError("mass must be positive")
    K = state.wavevectors()
    return _scalar_multiply(state, np.exp(-0.5j * np.sum(K * K, axis=0) * t / m))


def nonrel_phase_error(kmags, m: float, t: float) -> np.ndarray:
    """Phase gap between the exact and Schroedinger propagators (rest phase removed).

    Each entry is measured on a single-mode state on a 1-d grid sized so that
    the mode sits exactly on the lattice.
    """
    out = []
    for kk in np.atleast_1d(kmags):
        n = 8
        L = 2 * np.pi / kk
        x = np.arange(n) * (L / n)
        st = GridState(np.exp(1j * kk * x)[None, :], (L,))
        a = evolve_sf(st, m, t).data[0, 0] * np.exp(1j * m * t)
        b = evolve_nonrel(st, m, t).data[0, 0]
        out.append(abs(np.angle(a / b)))
    return np.asarray(out)


def nonrel_slope(m: float = 1.0, t: float = 10.0, kmin: float = 0.01, kmax: float = 0.1, n: int = 12) -> float:
    """Log-log slope of :func:`nonrel_phase_error` over ``|k|/m`` in ``[kmin, kmax]``."""
    ks = m * np.geomspace(kmin, kmax, n)
    err = nonrel_phase_error(ks, m, t)
    return float(np.polyfit(np.log(ks), np.log(err), 1)[0])


def transform_rep(state: GridState, frm: str, to: str, N: int, m: float) -> GridState:
    """Change representation: ``v`` in position space, ``V-``/``V+`` per mode."""
    if frm not in REPS or to not in REPS:
        raise ValueError(f"representations must be among {REPS}")
    _check_dim(state, N)
    if frm == to:
        return state
    order = {"rcqm": 0, "fw": 1, "dirac": 2}
    step = 1 if order[to] > order[frm] else -1
    cur, here = state, order[frm]
    while here != order[to]:
        nxt = here + step
        if {here, nxt} == {0, 1}:
            cur = cur.with_data(rl_apply(v_operator(N), cur.data))
        else:
            sign = -1 if nxt == 2 else +1
            cur = _matrix_multiply(cur, transition_symbol(N, cur.wavevectors(), m, sign))
        here = nxt
    return GridState(cur.data, cur.box, {**state.meta, "rep": to})


def _spin3_symbol(state: GridState, rep: str, config: SpinConfig, m: float) -> np.ndarray | None:
    if rep == "rcqm":
        return multiplet_spin(config)[2]
    if rep == "fw":
        return fw_spin(config)[2]
    s = fw_spin(config)[2]
    K = state.wavevectors()
    return np.einsum("ab...,bc,cd...->ad...", transition_symbol(config.dim, K, m, -1), s,
                     transition_symbol(config.dim, K, m, +1))


def mean_values(state: GridState, m: float, rep: str = "rcqm", config: SpinConfig | None = None) -> dict:
    """Norm, four-momentum and ``s^3`` mean values (Riemann sums / Parseval).

    The energy operator is ``w`` (rcqm), ``G0 w`` (fw) or ``G0(G.k + m)``
    (dirac); ``P0 >= m * norm`` is guaranteed only in the rcqm case.
    """
    ft = to_kspace(state.data)
    K = state.wavevectors()
    w = np.sqrt(np.sum(K * K, axis=0) + m * m)
    scale = state.cell_volume / np.prod(state.dims)
    dens = np.abs(ft) ** 2
    out = {"norm": state.norm()}
    if rep == "rcqm":
        out["P0"] = float(np.sum(w * dens) * scale)
    elif rep == "fw":
        h = state.ncomp // 2
        out["P0"] = float((np.sum(w * dens[:h]) - np.sum(w * dens[h:])) * scale)
    elif rep == "dirac":
        Hf = np.einsum("ab...,b...->a...", dirac_hamiltonian_symbol(state.ncomp, K, m), ft)
        out["P0"] = float(np.real(np.sum(ft.conj() * Hf)) * scale)
    else:
        raise ValueError(f"unknown representation {rep!r}")
    for l in range(3):
        out[f"P{l + 1}"] = float(np.sum(K[l] * dens) * scale)
    if config is not None:
        s3 = _spin3_symbol(state, rep, config, m)
        if s3.ndim == 2:
            sf = np.tensordot(s3, state.data, axes=(1, 0))
            out["mean_s3"] = float(np.real(np.sum(state.data.conj() * sf)) * state.cell_volume)
        else:
            sf = np.einsum("ab...,b...->a...", s3, ft)
            out["mean_s3"] = float(np.real(np.sum(ft.conj() * sf)) * scale)
    else:
        out["mean_s3"] = float("nan")
    return out


LOG_COLUMNS = ("t", "norm", "P0", "P1", "P2", "P3", "mean_s3")


@dataclass
class ConservedLog:
    rows: list[dict] = field(default_factory=list)

    def add(self, t: float, values: dict) -> None:
        self.rows.append({"t": float(t), **{c: values[c] for c in LOG_COLUMNS[1:]}})

    def column(self, name: str) -> np.ndarray:
        return np.array([r[name] for r in self.rows])

    def drift(self, name: str) -> float:
        """Largest deviation from the first sample, relative to ``max(1, |first|)``."""
        c = self.column(name)
        return float(np.max(np.abs(c - c[0])) / max(1.0, abs(c[0]))) if len(c) else 0.0

    def positive_energy(self, m: float) -> bool:
        return bool(np.all(self.column("P0") >= m * self.column("norm") * (1 - 1e-12)))

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            wr = csv.DictWriter(fh, fieldnames=LOG_COLUMNS)
            wr.writeheader()
            for r in self.rows:
                wr.writerow({k: repr(float(v)) for k, v in r.items()})


def evolve_rep(state: GridState, rep: str, m: float, t: float) -> GridState:
    """Evolve in the named representation; ``t = 0`` returns an exact copy."""
    if t == 0 and rep in REPS:
        return state.with_data(state.data.copy())
    if rep == "rcqm":
        return evolve_sf(state, m, t)
    if rep == "fw":
        return evolve_fw(state, state.ncomp, m, t)
    if rep == "dirac":
        return evolve_dirac(state, state.ncomp, m, t)
    raise ValueError(f"unknown representation {rep!r}")


def _rel(a: GridState, b: GridState) -> float:
    scale = max(float(np.max(np.abs(b.data))), 1e-300)
    return float(np.max(np.abs(a.data - b.data))) / scale


def cross_rep_equivalence(state0: GridState, N: int, m: float, t: float, tol: float = 1e-10) -> VerificationReport:
    """Evolve-then-transform against transform-then-evolve, for fw and dirac targets."""
    rep = VerificationReport(f"equivalence/N{N}")
    evolved = evolve_sf(state0, m, t)
    fw0 = transform_rep(state0, "rcqm", "fw", N, m)
    rep.add("rcqm_to_fw", _rel(transform_rep(evolved, "rcqm", "fw", N, m), evolve_fw(fw0, N, m, t)), tol,
            anchor="v maps the rcqm evolution onto the fw evolution")
    d0 = transform_rep(state0, "rcqm", "dirac", N, m)
    rep.add("rcqm_to_dirac", _rel(transform_rep(evolved, "rcqm", "dirac", N, m), evolve_dirac(d0, N, m, t)), tol,
            anchor="W maps the rcqm evolution onto the covariant evolution")
    rep.add("dirac_methods", _rel(evolve_dirac(d0, N, m, t, "eig"), evolve_dirac(d0, N, m, t)), tol,
            anchor="factorized and eigendecomposed propagators agree")
    back = transform_rep(transform_rep(state0, "rcqm", "dirac", N, m), "dirac", "rcqm", N, m)
    rep.add("round_trip", _rel(back, state0), tol, anchor="rcqm -> dirac -> rcqm is the identity")
    return rep


def random_state(N: int, dims, box, rng: np.random.Generator, kmax: float | None = None) -> GridState:
    """Random band-limited state (modes with ``|k| <= kmax`` filled with Gaussian noise)."""
    dims = tuple(dims)
    box = tuple(np.broadcast_to(np.atleast_1d(np.asarray(box, float)), (len(dims),)))
    ft = rng.normal(size=(N, *dims)) + 1j * rng.normal(size=(N, *dims))
    st = GridState(np.zeros((N, *dims)), box)
    if kmax is not None:
        K = st.wavevectors()
        ft = ft * (np.sqrt(np.sum(K * K, axis=0)) <= kmax)
    return st.with_data(from_kspace(ft))
