"""Forward-mode automatic differentiation with tagged, nestable dual numbers.

A :class:`Dual` carries a value and a tangent, both of which may be numpy
arrays or further duals.  Every seed gets a fresh integer tag; when two duals
with different tags meet, the one with the larger (more recent) tag is the
active perturbation and the other is treated as a constant.  This makes nested
differentiation safe against perturbation confusion.
"""

from __future__ import annotations

import itertools
from typing import Any, Callable

import numpy as np

_TAGS = itertools.count(1)


def _tag_of(x: Any) -> int:
    return x.tag if isinstance(x, Dual) else 0


def _split(x: Any, tag: int):
    if isinstance(x, Dual) and x.tag == tag:
        return x.val, x.eps
    return x, None


def _add_eps(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


class Dual:
    """Value plus first-order tangent for one perturbation tag."""

    __slots__ = ("val", "eps", "tag")
    __array_ufunc__ = None

    def __init__(self, val: Any, eps: Any, tag: int):
        self.val = val
        self.eps = eps
        self.tag = tag

    def __repr__(self) -> str:
        return f"Dual({self.val!r}, {self.eps!r}, tag={self.tag})"

    @property
    def shape(self) -> tuple:
        return np.shape(self.val) if not isinstance(self.val, Dual) else self.val.shape

    @property
    def ndim(self) -> int:
        return len(self.shape)

    @property
    def T(self) -> "Dual":
        return Dual(transpose(self.val), transpose(self.eps), self.tag)

    def __len__(self) -> int:
        return self.shape[0]

    def __getitem__(self, idx) -> "Dual":
        eps = self.eps if _ndim(self.eps) == 0 else self.eps[idx]
        return Dual(self.val[idx], eps, self.tag)

    def __neg__(self) -> "Dual":
        return Dual(-self.val, -self.eps, self.tag)

    def __pos__(self) -> "Dual":
        return self

    def __add__(self, other):
        t = max(self.tag, _tag_of(other))
        av, ae = _split(self, t)
        bv, be = _split(other, t)
        val = av + bv
        eps = _add_eps(ae, be)
        if _ndim(eps) < _ndim(val):
            eps = eps + 0.0 * val
        return Dual(val, eps, t)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return _mul(self, other, lambda a, b: a * b)

    def __rmul__(self, other):
        return _mul(other, self, lambda a, b: a * b)

    def __matmul__(self, other):
        return _mul(self, other, lambda a, b: a @ b)

    def __rmatmul__(self, other):
        return _mul(other, self, lambda a, b: a @ b)

    def __truediv__(self, other):
        return self * reciprocal(other)

    def __rtruediv__(self, other):
        return other * reciprocal(self)

    def __pow__(self, n: int):
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = 1.0
        for _ in range(n):
            out = out * self
        return out

    def conj(self) -> "Dual":
        return Dual(conj(self.val), conj(self.eps), self.tag)

    def sum(self, axis=None) -> "Dual":
        return Dual(_sum(self.val, axis), _sum(self.eps, axis) if _ndim(self.eps) else self.eps, self.tag)


def _mul(a, b, op):
    t = max(_tag_of(a), _tag_of(b))
    av, ae = _split(a, t)
    bv, be = _split(b, t)
    eps = None
    if ae is not None:
        eps = op(ae, bv)
    if be is not None:
        eps = _add_eps(eps, op(av, be))
    return Dual(op(av, bv), eps, t)


def _ndim(x) -> int:
    if isinstance(x, Dual):
        return x.ndim
    return np.ndim(x)


def _sum(x, axis):
    return x.sum(axis=axis) if isinstance(x, Dual) else np.sum(x, axis=axis)


def transpose(x):
    return x.T if isinstance(x, Dual) else np.transpose(x)


def conj(x):
    return x.conj() if isinstance(x, Dual) else np.conj(x)


def reciprocal(x):
    if isinstance(x, Dual):
        r = reciprocal(x.val)
        return Dual(r, -x.eps * r * r, x.tag)
    return 1.0 / x


def sqrt(x):
    if isinstance(x, Dual):
        r = sqrt(x.val)
        return Dual(r, x.eps * reciprocal(2.0 * r), x.tag)
    return np.sqrt(x)


def exp(x):
    if isinstance(x, Dual):
        e = exp(x.val)
        return Dual(e, x.eps * e, x.tag)
    return np.exp(x)


def dot(a, b):
    """Inner product of two 1-D vectors (no conjugation)."""
    return a @ b


def stack(items):
    """``np.stack`` that also accepts duals (all sharing the same tag)."""
    t = max(_tag_of(x) for x in items)
    if t == 0:
        return np.stack(items)
    vals, epss = [], []
    for x in items:
        v, e = _split(x, t)
        vals.append(v)
        epss.append(0.0 * v if e is None else (e + 0.0 * v if _ndim(e) < _ndim(v) else e))
    return Dual(stack(vals), stack(epss), t)


def value(x):
    """Strip every dual layer and return the plain numerical value."""
    while isinstance(x, Dual):
        x = x.val
    return x


def jvp(f: Callable, x, direction) -> tuple:
    """Return ``(f(x), df(x)[direction])`` using a fresh perturbation tag."""
    tag = next(_TAGS)
    out = f(Dual(x, np.asarray(direction, dtype=float), tag))
    if isinstance(out, Dual) and out.tag == tag:
        eps = out.eps if out.eps is not None else 0.0 * out.val
        if _ndim(eps) < _ndim(out.val):
            eps = eps + 0.0 * out.val
        return out.val, eps
    return out, 0.0 * out


def partial(f: Callable, x, axis: int):
    """Partial derivative of ``f`` at the 3-vector ``x`` along coordinate ``axis``."""
    e = np.zeros(np.shape(value(x)))
    e[axis] = 1.0
    return jvp(f, x, e)[1]


def gradient(f: Callable, x) -> list:
    """List of the three partial derivatives of ``f`` at ``x``."""
    return [partial(f, x, a) for a in range(np.shape(value(x))[0])]
