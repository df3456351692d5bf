"""Clifford-Dirac gamma matrix sets and anticommutator checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .report import VerificationReport
from .rlinear import RLinearOp, compose, v_operator

SIGMA = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)

I2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class GammaSet:
    """Ordered gamma operators with the diagonal metric they should realize."""

    matrices: tuple
    metric: tuple[float, ...]
    label: str

    def __len__(self) -> int:
        return len(self.matrices)

    def __getitem__(self, i):
        return self.matrices[i]

    @property
    def dim(self) -> int:
        m = self.matrices[0]
        return m.dim if isinstance(m, RLinearOp) else m.shape[0]

    @property
    def is_rlinear(self) -> bool:
        return isinstance(self.matrices[0], RLinearOp)


def _as_rl(x) -> RLinearOp:
    return x if isinstance(x, RLinearOp) else RLinearOp.from_linear(x)


def _block(a, b, c, d) -> np.ndarray:
    return np.block([[a, b], [c, d]])


def _prod(ops: Sequence) -> RLinearOp | np.ndarray:
    if any(isinstance(o, RLinearOp) for o in ops):
        out = _as_rl(ops[0])
        for o in ops[1:]:
            out = compose(out, _as_rl(o))
        return out
    out = ops[0]
    for o in ops[1:]:
        out = out @ o
    return out


def product(ops: Sequence) -> RLinearOp | np.ndarray:
    """Ordered product ``ops[0] ops[1] ...`` (R-linear composition if needed)."""
    return _prod(list(ops))


def standard_gammas() -> GammaSet:
    """Dirac-representation gamma^0..gamma^3 plus gamma^4 = gamma^0 gamma^1 gamma^2 gamma^3."""
    z = np.zeros((2, 2), dtype=complex)
    g0 = _block(I2, z, z, -I2)
    gk = [_block(z, s, -s, z) for s in SIGMA]
    g4 = g0 @ gk[0] @ gk[1] @ gk[2]
    return GammaSet((g0, *gk, g4), (1.0, -1.0, -1.0, -1.0, -1.0), "standard4")


def charge_conjugation(n: int = 4) -> RLinearOp:
    return RLinearOp.from_antilinear(np.eye(n))


def qm_gammas() -> GammaSet:
    """Antilinear gamma operators of the quantum-mechanical representation.

    gbar^0 = g^0, gbar^1 = g^1 C, gbar^2 = g^0 g^2 C, gbar^3 = g^3 C,
    gbar^4 = g^0 g^4 C; each equals ``v g^mu v``.
    """
    g = standard_gammas().matrices
    C = charge_conjugation()
    gb = (
        RLinearOp.from_linear(g[0]),
        compose(_as_rl(g[1]), C),
        compose(_as_rl(g[0] @ g[2]), C),
        compose(_as_rl(g[3]), C),
        compose(_as_rl(g[0] @ g[4]), C),
    )
    return GammaSet(gb, (1.0, -1.0, -1.0, -1.0, -1.0), "qm4")


def v_conjugated_gammas() -> tuple[RLinearOp, ...]:
    """``v gamma^mu v`` for the five standard gammas."""
    v = v_operator(4)
    return tuple(compose(compose(v, _as_rl(g)), v) for g in standard_gammas().matrices)


def extended_gammas(representation: str = "standard") -> GammaSet:
    """Seven mutually anticommuting generators (each squares to -I).

    standard: g1, g2, g3, g4, g5 = g1 g3 C, g6 = i g1 g3 C, g7 = i g0.
    qm:       gb1, gb2, gb3, gb4, gb5 = g1 g3 C, gb6 = -i g2 g4 C, gb7 = i.
    """
    g = standard_gammas().matrices
    C = charge_conjugation()
    g13C = compose(_as_rl(g[1] @ g[3]), C)
    if representation == "standard":
        ops = (
            _as_rl(g[1]), _as_rl(g[2]), _as_rl(g[3]), _as_rl(g[4]),
            g13C,
            compose(_as_rl(1j * g[1] @ g[3]), C),
            _as_rl(1j * g[0]),
        )
        label = "extended7"
    elif representation == "qm":
        gb = qm_gammas().matrices
        ops = (
            gb[1], gb[2], gb[3], gb[4],
            g13C,
            compose(_as_rl(-1j * g[2] @ g[4]), C),
            _as_rl(1j * np.eye(4)),
        )
        label = "qm_extended7"
    else:
        raise ValueError(f"unknown representation {representation!r}")
    return GammaSet(ops, (-1.0,) * 7, label)


def pauli_blocks(N: int) -> np.ndarray:
    """The three N/2-dimensional Pauli-type blocks Sigma^j used in Gamma_N."""
    if N == 4:
        return SIGMA.copy()
    if N == 8:
        return np.stack([np.kron(np.eye(2), s) for s in SIGMA])
    if N == 12:
        return np.stack([np.kron(s, np.eye(3)) for s in SIGMA])
    if N == 16:
        return np.stack([np.kron(np.eye(4), s) for s in SIGMA])
    raise ValueError(f"no Pauli blocks for N = {N}; expected 4, 8, 12 or 16")


def big_gammas(N: int) -> GammaSet:
    """Gamma_N^0 = diag(I, -I), Gamma_N^j = [[0, Sigma^j], [-Sigma^j, 0]]."""
    if N not in (8, 12, 16):
        raise ValueError(f"big gammas exist for N in (8, 12, 16), got {N}")
    return _gammas_from_blocks(N, f"big{N}")


def dirac_gammas(N: int) -> GammaSet:
    """Gamma^0..Gamma^3 for any supported N (N=4 gives the standard set)."""
    return _gammas_from_blocks(N, "standard4" if N == 4 else f"big{N}")


def _gammas_from_blocks(N: int, label: str) -> GammaSet:
    S = pauli_blocks(N)
    h = N // 2
    I = np.eye(h, dtype=complex)
    z = np.zeros((h, h), dtype=complex)
    g0 = _block(I, z, z, -I)
    gk = tuple(_block(z, s, -s, z) for s in S)
    return GammaSet((g0, *gk), (1.0, -1.0, -1.0, -1.0), label)


def anticommutator_residual(gs: GammaSet) -> float:
    """Largest deviation of ``{G^a, G^b}`` from ``2 metric_a delta_ab I``."""
    ops = [_as_rl(m) for m in gs.matrices]
    n = gs.dim
    res = 0.0
    for a in range(len(ops)):
        for b in range(a, len(ops)):
            ac = compose(ops[a], ops[b]) + compose(ops[b], ops[a])
            target = RLinearOp.from_linear(2 * gs.metric[a] * np.eye(n) if a == b else np.zeros((n, n)))
            res = max(res, ac.distance(target))
    return res


def check_clifford(gs: GammaSet, tol: float = 1e-14, metric: Sequence[float] | None = None) -> VerificationReport:
    if tol <= 0:
        raise ValueError("tol must be positive")
    if metric is not None:
        gs = GammaSet(gs.matrices, tuple(metric), gs.label)
    rep = VerificationReport(f"clifford/{gs.label}")
    rep.add("anticommutators", anticommutator_residual(gs), tol, anchor=f"clifford relations, {gs.label}")
    return rep


def spin_from_gammas(gk: Sequence) -> tuple[np.ndarray, ...]:
    """Hermitian spin ``i/2 (g2 g3, g3 g1, g1 g2)`` from a linear spatial triple."""
    if any(isinstance(g, RLinearOp) and not g.is_linear for g in gk):
        raise ValueError("i/2 products are ambiguous for antilinear gammas; use rotation_triple")
    g1, g2, g3 = (g.linear if isinstance(g, RLinearOp) else g for g in gk)
    return (0.5j * g2 @ g3, 0.5j * g3 @ g1, 0.5j * g1 @ g2)


def rotation_triple(gk: Sequence) -> tuple[RLinearOp, ...]:
    """Anti-Hermitian rotation generators ``1/2 (g2 g3, g3 g1, g1 g2)``.

    Unlike :func:`spin_from_gammas` this form makes sense when some of the
    gammas are antilinear, since no factor of ``i`` has to pass through ``C``.
    """
    g1, g2, g3 = (_as_rl(g) for g in gk)
    return tuple(compose(a, b).scale(0.5) for a, b in ((g2, g3), (g3, g1), (g1, g2)))


def rotation_residual(q: Sequence[RLinearOp]) -> float:
    """Largest deviation from ``[q_j, q_l] = eps_jln q_n``."""
    res = 0.0
    for j, l, n in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c = compose(q[j], q[l]) - compose(q[l], q[j]) - q[n]
        res = max(res, c.distance(RLinearOp.from_linear(np.zeros((q[0].dim,) * 2))))
    return res


def extended_subalgebras(representation: str = "standard") -> tuple[tuple[RLinearOp, ...], tuple[RLinearOp, ...]]:
    """The two rotation triples built from (G1, G2, G3) and (G4, G5, G6)."""
    e = extended_gammas(representation).matrices
    return rotation_triple(e[0:3]), rotation_triple(e[3:6])


def check_extended(representation: str = "standard", tol: float = 1e-14) -> VerificationReport:
    """Anticommutators, the seven-fold product and both SU(2) subalgebras."""
    gs = extended_gammas(representation)
    rep = check_clifford(gs, tol)
    n = gs.dim
    rep.add("product_of_seven", distance(product(gs.matrices), np.eye(n)), tol,
            anchor="product of the seven generators is the identity")
    a, b = extended_subalgebras(representation)
    rep.add("subalgebra_123", rotation_residual(a), tol, anchor="first su2 subalgebra")
    rep.add("subalgebra_456", rotation_residual(b), tol, anchor="second su2 subalgebra")
    cross = max(
        (compose(x, y) - compose(y, x)).distance(RLinearOp.from_linear(np.zeros((n, n))))
        for x in a for y in b
    )
    rep.add("subalgebras_commute", cross, tol, anchor="independent su2 subalgebras")
    return rep


def distance(a, b) -> float:
    return _as_rl(a).distance(_as_rl(b))
