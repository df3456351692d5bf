"""Periodic grids and N-component grid states."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np
from scipy import fft


@dataclass(frozen=True)
class GridState:
    """N-component complex field on a periodic box.

    ``data`` has shape ``(ncomp, n1[, n2[, n3]])``; ``box`` holds one length per
    spatial axis.  Trailing singleton axes are allowed but not required.
    """

    data: np.ndarray
    box: tuple[float, ...]
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        data = np.asarray(self.data, dtype=complex)
        if data.ndim < 2 or data.ndim > 4:
            raise ValueError(f"data must have shape (ncomp, n1[, n2, n3]), got {data.shape}")
        box = tuple(float(b) for b in np.atleast_1d(self.box))
        if len(box) == 1 and data.ndim > 2:
            box = box * (data.ndim - 1)
        if len(box) != data.ndim - 1:
            raise ValueError(f"box has {len(box)} lengths for a {data.ndim - 1}-d grid")
        if any(b <= 0 for b in box):
            raise ValueError("box lengths must be positive")
        if not np.all(np.isfinite(data)):
            raise ValueError("state contains non-finite entries")
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "box", box)

    @property
    def ncomp(self) -> int:
        return self.data.shape[0]

    @property
    def dims(self) -> tuple[int, ...]:
        return self.data.shape[1:]

    @property
    def ndim(self) -> int:
        return self.data.ndim - 1

    @property
    def cell_volume(self) -> float:
        return float(np.prod([L / n for L, n in zip(self.box, self.dims)]))

    def with_data(self, data: np.ndarray) -> "GridState":
        return GridState(data, self.box, dict(self.meta))

    def norm(self) -> float:
        """Riemann-sum approximation of the integral of ``|f|^2``."""
        return float(np.sum(np.abs(self.data) ** 2) * self.cell_volume)

    def wavevectors(self) -> np.ndarray:
        return wavevectors(self.dims, self.box)

    def positions(self) -> np.ndarray:
        return positions(self.dims, self.box)


def wavevectors(dims, box) -> np.ndarray:
    """Lattice wave vectors, shape ``(3, *dims)``; unused axes are zero."""
    axes = [2 * np.pi * np.fft.fftfreq(n, d=L / n) for n, L in zip(dims, box)]
    mesh = np.meshgrid(*axes, indexing="ij")
    out = np.zeros((3, *dims))
    for j, g in enumerate(mesh):
        out[j] = g
    return out


def positions(dims, box) -> np.ndarray:
    """Cell positions on ``[0, L)``, shape ``(3, *dims)``; unused axes are zero."""
    axes = [np.arange(n) * (L / n) for n, L in zip(dims, box)]
    mesh = np.meshgrid(*axes, indexing="ij")
    out = np.zeros((3, *dims))
    for j, g in enumerate(mesh):
        out[j] = g
    return out


def _axes(ndim: int) -> tuple[int, ...]:
    return tuple(range(1, ndim + 1))


def default_workers() -> int | None:
    """Worker cap from ``RCQM_THREADS`` (unset means the scipy default)."""
    raw = os.environ.get("RCQM_THREADS")
    if not raw:
        return None
    n = int(raw)
    if n < 1:
        raise ValueError(f"RCQM_THREADS must be a positive integer, got {raw!r}")
    return n


def to_kspace(data: np.ndarray, workers: int | None = None) -> np.ndarray:
    return fft.fftn(data, axes=_axes(data.ndim - 1), workers=workers or default_workers())


def from_kspace(data: np.ndarray, workers: int | None = None) -> np.ndarray:
    return fft.ifftn(data, axes=_axes(data.ndim - 1), workers=workers or default_workers())


def apply_multiplier(state: GridState, symbol: np.ndarray, workers: int | None = None) -> GridState:
    """Multiply every Fourier mode by a matrix (``(N, N, *dims)``) or scalar (``dims``) symbol."""
    ft = to_kspace(state.data, workers)
    symbol = np.asarray(symbol)
    if symbol.ndim == state.ndim:
        ft = ft * symbol
    else:
        ft = np.einsum("ab...,b...->a...", symbol, ft)
    return state.with_data(from_kspace(ft, workers))
