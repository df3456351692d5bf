"""Transitions between the RCQM, canonical-field (FW) and covariant representations.

Naming.  ``V-(k) = (-G.k + w + m) / sqrt(2w(w+m))`` maps canonical fields to
covariant ones (``psi = V- phi``) and ``V+ = (V-)^dagger`` is its inverse.
Here ``G.k = sum_j G^j k^j`` with the contravariant wave vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from . import autodiff as ad
from . import tables
from .clifford import dirac_gammas, spin_from_gammas
from .kspace_ops import omega
from .report import VerificationReport
from .rlinear import RLinearOp, compose, conjugate_generator, v_operator
from .spin_algebra import NAMED_CONFIGS, SpinConfig, SpinTriple, fw_block_spin, multiplet_spin, su2_residual

# canonical paired configuration for each covariant dimension
DEFAULT_CONFIGS: dict[int, SpinConfig] = {
    4: SpinConfig.doublet(1),
    8: SpinConfig.doublet(2, 0),
    12: SpinConfig.doublet(4, 0),
    16: SpinConfig.doublet(4, 2),
}

_GAMMA_CACHE: dict[int, tuple] = {}


def gammas(N: int) -> tuple:
    if N not in _GAMMA_CACHE:
        _GAMMA_CACHE[N] = dirac_gammas(N).matrices
    return _GAMMA_CACHE[N]


def gamma_dot(N: int, k):
    g = gammas(N)
    return g[1] * k[0] + g[2] * k[1] + g[3] * k[2]


def _transition(N: int, k, m: float, sign: int):
    w = omega(k, m)
    num = (w + m) * np.eye(N) + sign * gamma_dot(N, k)
    return num * ad.reciprocal(ad.sqrt(2.0 * w * (w + m)))


def vminus_matrix(N: int, k, m: float):
    """``(-G.k + w + m) / sqrt(2w(w+m))``; accepts duals."""
    return _transition(N, k, m, -1)


def vplus_matrix(N: int, k, m: float):
    """``(+G.k + w + m) / sqrt(2w(w+m))``; accepts duals."""
    return _transition(N, k, m, +1)


def dirac_hamiltonian(N: int, k, m: float):
    """``G0 (G.k + m)``."""
    g0 = gammas(N)[0]
    return g0 @ gamma_dot(N, k) + m * g0


def fw_hamiltonian(N: int, k, m: float):
    return omega(k, m) * gammas(N)[0]


@dataclass(frozen=True)
class TransitionPair:
    N: int
    m: float

    def Vminus(self, k):
        return vminus_matrix(self.N, k, self.m)

    def Vplus(self, k):
        return vplus_matrix(self.N, k, self.m)

    def hamiltonian(self, k):
        return dirac_hamiltonian(self.N, k, self.m)


def fw_transition(N: int, m: float) -> TransitionPair:
    if N not in (4, 8, 12, 16):
        raise ValueError(f"N must be 4, 8, 12 or 16, got {N}")
    if m <= 0:
        raise ValueError("mass must be positive")
    return TransitionPair(N, m)


def check_transitions(N: int, m: float, samples, tol: float = 1e-12) -> VerificationReport:
    """Inverse, adjoint and similarity identities at the given momenta."""
    pair = fw_transition(N, m)
    I = np.eye(N)
    inv = adj = sim = lit = norm_id = 0.0
    for k in np.atleast_2d(samples):
        vm, vp = pair.Vminus(k), pair.Vplus(k)
        w = omega(k, m)
        inv = max(inv, np.max(np.abs(vm @ vp - I)), np.max(np.abs(vp @ vm - I)))
        adj = max(adj, np.max(np.abs(vm.conj().T - vp)))
        H = pair.hamiltonian(k)
        sim = max(sim, np.max(np.abs(vm @ fw_hamiltonian(N, k, m) @ vp - H)) / w)
        # the literal operand order V+ (G0 w) V- gives H(-k)
        lit = max(lit, np.max(np.abs(vp @ fw_hamiltonian(N, k, m) @ vm - pair.hamiltonian(-k))) / w)
        norm_id = max(norm_id, abs((w + m) ** 2 + k @ k - 2 * w * (w + m)) / (w * w))
    rep = VerificationReport(f"transitions/N{N}")
    rep.add("inverse", inv, tol, anchor="V- V+ = V+ V- = I")
    rep.add("adjoint", adj, tol, anchor="V- is the adjoint of V+")
    rep.add("similarity", sim, tol, anchor="FW hamiltonian conjugates to G0(G.k + m)")
    rep.add("similarity_reversed_order", lit, tol, anchor="reversed operand order gives H(-k)")
    rep.add("normalization_identity", norm_id, tol, anchor="(w+m)^2 + k^2 = 2w(w+m)")
    return rep


def w_operator(N: int, k, m: float) -> RLinearOp:
    """Fixed-k ``W = V- o v`` (RCQM to covariant); inverse ``v o V+``."""
    return compose(RLinearOp.from_linear(vminus_matrix(N, np.asarray(k, float), m)), v_operator(N))


def w_inverse(N: int, k, m: float) -> RLinearOp:
    return compose(v_operator(N), RLinearOp.from_linear(vplus_matrix(N, np.asarray(k, float), m)))


def fw_spin(config: SpinConfig | str) -> SpinTriple:
    """``diag(s, s)`` for a paired config."""
    config = SpinConfig.parse(config) if isinstance(config, str) else config
    if not config.is_paired:
        raise ValueError("FW spin needs a paired particle-antiparticle config")
    return fw_block_spin(config)


def fw_spin_via_v(config: SpinConfig | str) -> SpinTriple:
    """``v (i s_RCQM) v / i``, the route from the RCQM spin."""
    config = SpinConfig.parse(config) if isinstance(config, str) else config
    v = v_operator(config.dim)
    out = []
    for s in multiplet_spin(config):
        q = conjugate_generator(v, RLinearOp.from_linear(1j * s))
        if not q.is_linear:
            raise ValueError("conjugated spin picked up an antilinear part")
        out.append(q.linear / 1j)
    return SpinTriple(*out)


def _fw_spin_for(N: int, config) -> SpinTriple:
    config = DEFAULT_CONFIGS[N] if config is None else config
    config = SpinConfig.parse(config) if isinstance(config, str) else config
    if config.dim != N:
        raise ValueError(f"config {config.label()} has dimension {config.dim}, expected {N}")
    return fw_spin(config)


def dirac_spin_computed(N: int, config, m: float) -> Callable[[Any], list]:
    """``k -> [V- s^j V+ for j = 1, 2, 3]``."""
    S = _fw_spin_for(N, config)

    def s_D(k):
        vm, vp = vminus_matrix(N, k, m), vplus_matrix(N, k, m)
        return [vm @ s @ vp for s in S]
    return s_D


def check_dirac_spin(N: int, config, m: float, samples, tol: float = 1e-10) -> VerificationReport:
    s_D = dirac_spin_computed(N, config, m)
    su2 = comm = herm = 0.0
    for k in np.atleast_2d(samples):
        S = s_D(k)
        H = dirac_hamiltonian(N, k, m)
        su2 = max(su2, su2_residual(S))
        comm = max(comm, max(float(np.max(np.abs(s @ H - H @ s))) for s in S) / omega(k, m))
        herm = max(herm, max(float(np.max(np.abs(s - s.conj().T))) for s in S))
    rep = VerificationReport(f"covariant_spin/N{N}")
    rep.add("su2", su2, tol, anchor="covariant spin su2 algebra")
    rep.add("commutes_with_H", comm, tol, anchor="covariant spin commutes with the hamiltonian")
    rep.add("hermitian", herm, tol, anchor="covariant spin is hermitian")
    return rep


def dirac_spin_nonlocal4(k, m: float, grad_sign: int = 1) -> list:
    """``s - (g x grad)/(2w) + grad x (s x grad)/(w(w+m))`` with ``grad -> grad_sign * i k``."""
    k = np.asarray(k, dtype=float)
    g = gammas(4)
    S = spin_from_gammas(g[1:4])
    w = omega(k, m)
    nab = grad_sign * 1j * k
    out = []
    for l in range(3):
        a, b = (l + 1) % 3, (l + 2) % 3
        gx = g[a + 1] * nab[b] - g[b + 1] * nab[a]
        # (s x grad)_j
        sx = [S[(j + 1) % 3] * nab[(j + 2) % 3] - S[(j + 2) % 3] * nab[(j + 1) % 3] for j in range(3)]
        curl = nab[a] * sx[b] - nab[b] * sx[a]
        out.append(S[l] - gx / (2 * w) + curl / (w * (w + m)))
    return out


def position_offset_oracle(N: int, k, m: float) -> list:
    """Zeroth-order part of ``V- x^l V+`` with ``x^l = i d/dk^l``: ``i V- dV+/dk^l``."""
    k = np.asarray(k, dtype=float)
    vm = vminus_matrix(N, k, m)
    return [1j * vm @ ad.partial(lambda q: vplus_matrix(N, q, m), k, l) for l in range(3)]


def position_offset_printed(N: int, k, m: float, spin: SpinTriple | list) -> list:
    """``i G/(2w) - (s x k)/(w(w+m)) - i k (G.k)/(2 w^2 (w+m))`` for a given spin triple."""
    k = np.asarray(k, dtype=float)
    g = gammas(N)
    w = omega(k, m)
    S = list(spin)
    gk = gamma_dot(N, k)
    out = []
    for l in range(3):
        a, b = (l + 1) % 3, (l + 2) % 3
        sxk = S[a] * k[b] - S[b] * k[a]
        out.append(1j * g[l + 1] / (2 * w) - sxk / (w * (w + m)) - 1j * k[l] * gk / (2 * w * w * (w + m)))
    return out


def gamma_spin(N: int) -> list:
    """``i/2 (G2 G3, G3 G1, G1 G2)``."""
    return list(spin_from_gammas(gammas(N)[1:4]))


def dirac_spin_paper(rep: str, k, m: float) -> dict[int, np.ndarray]:
    """Printed covariant spin components ``{j: matrix}`` for ``s8_vector``, ``s8_spin32`` or ``s16_third``."""
    if rep not in tables.COVARIANT_TABLES:
        raise ValueError(f"unknown table {rep!r}; expected one of {sorted(tables.COVARIANT_TABLES)}")
    if m <= 0:
        raise ValueError("mass must be positive")
    comps = tables.COVARIANT_TABLES[rep][2]
    return {j: tables.table_matrix(rep, j, k, m) for j in comps}


def errata_diff(rep: str, m: float = 1.0, n_samples: int = 50, seed: int = 0,
                tol: float = 1e-10) -> list[dict]:
    """Per-element disagreements between a printed table and ``V- s V+``.

    An element is reported when it differs by more than ``tol`` at any of the
    sampled momenta; the entry records the worst sample.
    """
    N, cfg, comps = tables.COVARIANT_TABLES[rep]
    config = NAMED_CONFIGS[cfg]
    s_D = dirac_spin_computed(N, config, m)
    rng = np.random.default_rng(seed)
    worst: dict[tuple[int, int, int], tuple[float, np.ndarray, complex, complex]] = {}
    for _ in range(n_samples):
        k = rng.uniform(-3 * m, 3 * m, size=3)
        computed = s_D(k)
        for j, printed in dirac_spin_paper(rep, k, m).items():
            diff = np.abs(printed - computed[j - 1])
            for r, c in zip(*np.nonzero(diff > tol)):
                key = (j, int(r) + 1, int(c) + 1)
                if key not in worst or diff[r, c] > worst[key][0]:
                    worst[key] = (float(diff[r, c]), k, complex(printed[r, c]), complex(computed[j - 1][r, c]))
    out = []
    for (j, r, c), (d, k, pv, cv) in sorted(worst.items()):
        out.append({
            "table": rep, "component": j, "row": r, "col": c,
            "paper_value_expr": tables.table_elements(rep, j)[(r, c)],
            "paper_value": [pv.real, pv.imag],
            "computed_value": [cv.real, cv.imag],
            "k": [float(x) for x in k], "abs_diff": d,
        })
    return out


def check_nonlocal4(m: float, samples, tol: float = 1e-10) -> VerificationReport:
    """The nonlocal 4-component spin formula against ``V- s V+``."""
    s_D = dirac_spin_computed(4, None, m)
    res = 0.0
    for k in np.atleast_2d(samples):
        res = max(res, max(float(np.max(np.abs(a - b))) for a, b in zip(dirac_spin_nonlocal4(k, m), s_D(k))))
    rep = VerificationReport("covariant_spin/nonlocal4")
    rep.add("equals_conjugated_spin", res, tol, anchor="nonlocal spin formula equals V- s V+")
    return rep


def position_offset_diagnostic(N: int, m: float, samples) -> dict[str, float]:
    """Largest deviation of the printed position offset from ``i V- dV+`` for two spin choices.

    ``gamma_spin`` is ``i/2 G x G`` (the Pauli-block spin); ``multiplet_spin``
    is the FW spin of the default configuration.  They coincide for N = 4.
    """
    out = {"gamma_spin": 0.0, "multiplet_spin": 0.0}
    spins = {"gamma_spin": gamma_spin(N), "multiplet_spin": list(fw_spin(DEFAULT_CONFIGS[N]))}
    for k in np.atleast_2d(samples):
        oracle = position_offset_oracle(N, k, m)
        for name, S in spins.items():
            d = max(float(np.max(np.abs(a - b))) for a, b in zip(oracle, position_offset_printed(N, k, m, S)))
            out[name] = max(out[name], d)
    return out
