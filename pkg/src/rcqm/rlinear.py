"""Real-linear operators ``f -> L f + A conj(f)`` on C^N.

These house the complex-conjugation based transition ``v`` and the
antilinear gamma matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RLinearOp:
    linear: np.ndarray
    antilinear: np.ndarray

    def __post_init__(self):
        L = np.asarray(self.linear, dtype=complex)
        A = np.asarray(self.antilinear, dtype=complex)
        if L.shape != A.shape or L.ndim != 2 or L.shape[0] != L.shape[1]:
            raise ValueError(f"linear/antilinear parts must be equal square matrices, got {L.shape}, {A.shape}")
        object.__setattr__(self, "linear", L)
        object.__setattr__(self, "antilinear", A)

    @property
    def dim(self) -> int:
        return self.linear.shape[0]

    @classmethod
    def from_linear(cls, L) -> "RLinearOp":
        L = np.asarray(L, dtype=complex)
        return cls(L, np.zeros_like(L))

    @classmethod
    def from_antilinear(cls, A) -> "RLinearOp":
        A = np.asarray(A, dtype=complex)
        return cls(np.zeros_like(A), A)

    @classmethod
    def identity(cls, n: int) -> "RLinearOp":
        return cls.from_linear(np.eye(n))

    @property
    def is_linear(self) -> bool:
        return not np.any(self.antilinear)

    def __call__(self, f):
        return apply(self, f)

    def __matmul__(self, other: "RLinearOp") -> "RLinearOp":
        return compose(self, other)

    def __add__(self, other: "RLinearOp") -> "RLinearOp":
        return RLinearOp(self.linear + other.linear, self.antilinear + other.antilinear)

    def __sub__(self, other: "RLinearOp") -> "RLinearOp":
        return RLinearOp(self.linear - other.linear, self.antilinear - other.antilinear)

    def __neg__(self) -> "RLinearOp":
        return RLinearOp(-self.linear, -self.antilinear)

    def scale(self, c: float) -> "RLinearOp":
        """Multiply by a real scalar (complex scalars need :func:`compose`)."""
        if np.iscomplexobj(c) and np.imag(c) != 0:
            raise ValueError("complex scalars do not commute with C; use compose")
        return RLinearOp(c * self.linear, c * self.antilinear)

    def distance(self, other: "RLinearOp") -> float:
        return float(max(np.max(np.abs(self.linear - other.linear)),
                         np.max(np.abs(self.antilinear - other.antilinear))))


def _check_dims(a: RLinearOp, b: RLinearOp) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def apply(op: RLinearOp, f) -> np.ndarray:
    """``L f + A conj(f)``; ``f`` may carry extra trailing axes (e.g. a grid)."""
    f = np.asarray(f)
    if f.shape[0] != op.dim:
        raise ValueError(f"dimension mismatch: operator {op.dim}, vector {f.shape[0]}")
    out = np.tensordot(op.linear, f, axes=(1, 0))
    if np.any(op.antilinear):
        out = out + np.tensordot(op.antilinear, np.conj(f), axes=(1, 0))
    return out


def compose(a: RLinearOp, b: RLinearOp) -> RLinearOp:
    """``a`` after ``b``."""
    _check_dims(a, b)
    return RLinearOp(a.linear @ b.linear + a.antilinear @ b.antilinear.conj(),
                     a.linear @ b.antilinear + a.antilinear @ b.linear.conj())


def conjugation(n: int) -> RLinearOp:
    """Plain complex conjugation ``C`` on C^n."""
    return RLinearOp.from_antilinear(np.eye(n))


def v_operator(N: int) -> RLinearOp:
    """Identity on the upper half, complex conjugation on the lower half."""
    if N <= 0 or N % 2:
        raise ValueError(f"v needs an even positive dimension, got {N}")
    h = N // 2
    L = np.zeros((N, N), dtype=complex)
    A = np.zeros((N, N), dtype=complex)
    L[:h, :h] = np.eye(h)
    A[h:, h:] = np.eye(h)
    return RLinearOp(L, A)


def adjoint(op: RLinearOp) -> RLinearOp:
    """Adjoint ``(L^dagger, A^T)``.

    For the real inner product ``Re<g, f>`` this is the genuine adjoint:
    ``Re<g, op f> = Re<adjoint(op) g, f>``.
    """
    return RLinearOp(op.linear.conj().T, op.antilinear.T)


def is_antihermitian(q: RLinearOp, tol: float = 1e-12) -> bool:
    """True iff ``L^dagger = -L`` and ``A^T = -A``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return bool(np.max(np.abs(q.linear.conj().T + q.linear), initial=0.0) < tol
                and np.max(np.abs(q.antilinear.T + q.antilinear), initial=0.0) < tol)


def conjugate_generator(v: RLinearOp, q: RLinearOp, assert_antihermitian: bool = True,
                        tol: float = 1e-12) -> RLinearOp:
    """``v q v`` for a self-inverse ``v``.

    The map is only meaningful for anti-Hermitian ``q``; with the flag set a
    Hermitian input is rejected instead of silently producing a wrong sign.
    """
    _check_dims(v, q)
    if compose(v, v).distance(RLinearOp.identity(v.dim)) > tol:
        raise ValueError("v must be self-inverse")
    if assert_antihermitian and not is_antihermitian(q, tol):
        herm = float(np.max(np.abs(q.linear.conj().T + q.linear)))
        raise ValueError(f"generator is not anti-Hermitian (|L^dagger + L| = {herm:.3e}); "
                         "multiply by i first or pass assert_antihermitian=False")
    return compose(compose(v, q), v)
