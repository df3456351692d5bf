"""RCQM-ARRAY snapshots.

Layout: magic ``b"RCQM1"``, six little-endian u32 (ncomp, ndim, n1, n2, n3,
flags), three little-endian f64 box lengths, then the row-major,
component-major data as f64 (real, imaginary) pairs, or as single f64 values
when the real-layout flag is set.  Unused grid sizes are 1 and unused box
lengths are 0.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .grid import GridState
from .maxwell import FieldState

MAGIC = b"RCQM1"
REAL_LAYOUT = 1
_HEADER = struct.Struct("<6I3d")


class FormatError(ValueError):
    pass


def encode(data: np.ndarray, box, real: bool = False) -> bytes:
    data = np.asarray(data)
    ncomp, dims = data.shape[0], data.shape[1:]
    if not 1 <= len(dims) <= 3:
        raise ValueError(f"expected 1 to 3 grid axes, got {len(dims)}")
    box = tuple(float(b) for b in np.broadcast_to(np.atleast_1d(box), (len(dims),)))
    n = list(dims) + [1] * (3 - len(dims))
    b = list(box) + [0.0] * (3 - len(box))
    if real:
        if np.iscomplexobj(data) and np.any(data.imag != 0):
            raise ValueError("real layout requested for complex data")
        payload = np.ascontiguousarray(np.real(data), dtype="<f8").tobytes()
    else:
        payload = np.ascontiguousarray(data, dtype="<c16").tobytes()
    header = _HEADER.pack(ncomp, len(dims), *n, REAL_LAYOUT if real else 0, *b)
    return MAGIC + header + payload


def decode(buf: bytes) -> tuple[np.ndarray, tuple[float, ...], bool]:
    if buf[:len(MAGIC)] != MAGIC:
        raise FormatError("not an RCQM-ARRAY file")
    off = len(MAGIC)
    if len(buf) < off + _HEADER.size:
        raise FormatError("truncated header")
    ncomp, ndim, n1, n2, n3, flags, b1, b2, b3 = _HEADER.unpack_from(buf, off)
    if not 1 <= ndim <= 3:
        raise FormatError(f"bad ndim {ndim}")
    dims = (n1, n2, n3)[:ndim]
    real = bool(flags & REAL_LAYOUT)
    dtype = "<f8" if real else "<c16"
    count = ncomp * int(np.prod(dims))
    body = buf[off + _HEADER.size:]
    if len(body) != count * np.dtype(dtype).itemsize:
        raise FormatError(f"payload has {len(body)} bytes, expected {count * np.dtype(dtype).itemsize}")
    data = np.frombuffer(body, dtype=dtype).reshape(ncomp, *dims).copy()
    return data, (b1, b2, b3)[:ndim], real


def write_state(path, state: GridState | FieldState) -> None:
    real = isinstance(state, FieldState)
    Path(path).write_bytes(encode(state.data, state.box, real))


def read_state(path) -> GridState | FieldState:
    data, box, real = decode(Path(path).read_bytes())
    if real and data.shape[0] == 8:
        return FieldState(data, box)
    return GridState(data, box)
