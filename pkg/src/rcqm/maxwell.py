"""Field-strength reading of the 8-component equation.

Fields are stored as ``(E0, E1, E2, E3, H0, H1, H2, H3)``.  The extracted
system is written as ``d0 F = sum_j D_j d_j F + m K F`` with real 8x8
coefficient tables; the upper and lower halves of the 8-component equation
give the same ``D_j`` and opposite ``K``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .grid import GridState, from_kspace, to_kspace, wavevectors
from .evolution import evolve_dirac
from .transitions import gammas

FIELD_NAMES = ("E0", "E1", "E2", "E3", "H0", "H1", "H2", "H3")
_IDX = {n: i for i, n in enumerate(FIELD_NAMES)}
# psi_{5..8} = -psi_{3,4,1,2}
_LOWER_PERM = (2, 3, 0, 1)


class SubspaceViolation(ArithmeticError):
    """A spinor left the image of the field substitution."""

    def __init__(self, residual: float):
        super().__init__(f"spinor left the field-substitution image (residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class FieldState:
    data: np.ndarray
    box: tuple[float, ...]
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        data = np.asarray(self.data)
        if np.iscomplexobj(data):
            if np.max(np.abs(data.imag), initial=0.0) > 1e-12 * max(1.0, float(np.max(np.abs(data)))):
                raise ValueError("field strengths must be real")
            data = data.real
        data = np.asarray(data, dtype=float)
        if data.shape[0] != 8 or data.ndim < 2:
            raise ValueError(f"expected shape (8, *dims), got {data.shape}")
        if not np.all(np.isfinite(data)):
            raise ValueError("fields contain non-finite entries")
        box = tuple(float(b) for b in np.broadcast_to(np.atleast_1d(self.box), (data.ndim - 1,)))
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "box", box)

    def __getitem__(self, name: str) -> np.ndarray:
        return self.data[_IDX[name]]

    @property
    def dims(self) -> tuple[int, ...]:
        return self.data.shape[1:]

    @property
    def cell_volume(self) -> float:
        return float(np.prod([L / n for L, n in zip(self.box, self.dims)]))

    def energy(self) -> float:
        """Riemann sum of ``E^2 + H^2`` over all eight components."""
        return float(np.sum(self.data ** 2) * self.cell_volume)

    @classmethod
    def from_components(cls, box, **fields) -> "FieldState":
        shape = np.shape(next(iter(fields.values())))
        data = np.zeros((8, *shape))
        for name, val in fields.items():
            data[_IDX[name]] = val
        return cls(data, box)


def _psi_columns(F: np.ndarray) -> np.ndarray:
    E0, E1, E2, E3, H0, H1, H2, H3 = F
    return np.stack([
        E3 + 1j * H0, E1 + 1j * E2, 1j * H3 + E0, -H2 + 1j * H1,
        -1j * H3 - E0, H2 - 1j * H1, -E3 - 1j * H0, -E1 - 1j * E2,
    ])


def _fields_from_upper(u: np.ndarray) -> np.ndarray:
    return np.stack([u[2].real, u[1].real, u[1].imag, u[0].real,
                     u[0].imag, u[3].imag, -u[3].real, u[2].imag])


def fields_to_psi(F: FieldState) -> GridState:
    return GridState(_psi_columns(F.data), F.box, {"rep": "dirac"})


def image_residual(psi: np.ndarray) -> float:
    """``max |psi_lower + P psi_upper|`` (zero exactly on the image)."""
    psi = np.asarray(psi)
    return float(np.max(np.abs(psi[4:] + psi[list(_LOWER_PERM)]), initial=0.0))


def psi_to_fields(psi: GridState, tol: float = 1e-10) -> FieldState:
    res = image_residual(psi.data)
    scale = max(1.0, float(np.max(np.abs(psi.data), initial=0.0)))
    if res > tol * scale:
        raise SubspaceViolation(res)
    return FieldState(_fields_from_upper(psi.data[:4]), psi.box)


# -- coefficient extraction ----------------------------------------------------

@dataclass(frozen=True)
class SignedSystem:
    """``d0 F = sum_j D[j] d_j F + m K F``; ``K_lower`` is the lower-half reading."""

    D: np.ndarray          # (3, 8, 8)
    K: np.ndarray          # (8, 8), upper four complex equations
    K_lower: np.ndarray    # (8, 8), lower four complex equations
    m: float
    image_defect: float    # largest lower/upper disagreement of the substituted equation

    def symbol(self, K_vec: np.ndarray, which: str = "upper") -> np.ndarray:
        """Per-mode generator ``i D.k + m K``, shape ``(8, 8, *dims)``."""
        Km = self.K if which == "upper" else self.K_lower
        out = 1j * np.einsum("jab,j...->ab...", self.D.astype(complex), K_vec)
        return out + self.m * Km.reshape(8, 8, *([1] * (K_vec.ndim - 1)))

    def table(self, which: str = "upper") -> dict[tuple[str, str, str], float]:
        """Nonzero coefficients keyed by ``(equation, term, source)``; term is ``d1..d3`` or ``m``."""
        out = {}
        for j in range(3):
            for r, c in zip(*np.nonzero(np.abs(self.D[j]) > 1e-12)):
                out[(FIELD_NAMES[r], f"d{j + 1}", FIELD_NAMES[c])] = float(self.D[j][r, c])
        Km = self.K if which == "upper" else self.K_lower
        for r, c in zip(*np.nonzero(np.abs(self.m * Km) > 1e-12)):
            out[(FIELD_NAMES[r], "m", FIELD_NAMES[c])] = float(Km[r, c])
        return out


@lru_cache(maxsize=64)
def derive_signed_system(m: float, n_probe: int = 48, seed: int = 0) -> SignedSystem:
    """Substitute the field map into ``i d0 psi = G0(-i G.grad + m) psi`` and read off real coefficients.

    The fields are random affine polynomials ``F(x) = a + B x`` at the origin,
    so ``d_j F = B[:, j]`` exactly; the coefficients are recovered by least
    squares over ``n_probe`` draws (exact to rounding, since the map is linear).
    """
    g = gammas(8)
    g0 = g[0]
    rng = np.random.default_rng(seed)
    A = -np.stack([g0 @ g[j + 1] for j in range(3)])   # d0 psi = sum_j A_j d_j psi - i m g0 psi
    Mm = -1j * g0
    rows_in, rows_up, rows_lo, defect = [], [], [], 0.0
    for _ in range(n_probe):
        a = rng.normal(size=8)
        B = rng.normal(size=(8, 3))
        psi = _psi_columns(a)
        dpsi = [_psi_columns(B[:, j]) for j in range(3)]
        rhs = sum(A[j] @ dpsi[j] for j in range(3)) + m * (Mm @ psi)
        defect = max(defect, image_residual(rhs))
        up = _fields_from_upper(rhs[:4])
        lo = _fields_from_upper(-rhs[4:][list(_LOWER_PERM)])
        rows_in.append(np.concatenate([B[:, 0], B[:, 1], B[:, 2], m * a]))
        rows_up.append(up)
        rows_lo.append(lo)
    X = np.array(rows_in)
    cu = np.linalg.lstsq(X, np.array(rows_up), rcond=None)[0].T
    cl = np.linalg.lstsq(X, np.array(rows_lo), rcond=None)[0].T
    cu[np.abs(cu) < 1e-12] = 0.0
    cl[np.abs(cl) < 1e-12] = 0.0
    D = np.stack([cu[:, 8 * j:8 * (j + 1)] for j in range(3)])
    D_lower = np.stack([cl[:, 8 * j:8 * (j + 1)] for j in range(3)])
    if not np.allclose(D, D_lower, atol=1e-12):
        raise ArithmeticError("upper and lower halves disagree on the derivative terms")
    K = cu[:, 24:] if m != 0 else _mass_table(+1)
    K_lower = cl[:, 24:] if m != 0 else _mass_table(-1)
    arrays = [np.round(a, 12) for a in (D, K, K_lower)]
    for a in arrays:
        a.setflags(write=False)    # shared through the cache
    return SignedSystem(*arrays, float(m), defect)


def _mass_table(sign: int) -> np.ndarray:
    """Mass coupling read at unit mass (used when ``m = 0`` leaves it undetermined)."""
    return derive_signed_system(1.0).K if sign > 0 else derive_signed_system(1.0).K_lower


# -- printed systems -------------------------------------------------------------

def _curl(target: str, src: str, comp: int) -> dict[tuple[str, str, str], float]:
    """Coefficients of ``(curl src)^comp`` in the equation for ``target``."""
    a, b = comp % 3 + 1, (comp + 1) % 3 + 1
    return {(target, f"d{a}", f"{src}{b}"): 1.0, (target, f"d{b}", f"{src}{a}"): -1.0}


def printed_system(sign: int = +1, m_terms: bool = True) -> dict[tuple[str, str, str], float]:
    """The printed Maxwell-like system solved for ``d0``; ``sign=+1`` takes the upper mass signs."""
    t: dict[tuple[str, str, str], float] = {}

    def put(eq, term, src, c):
        t[(eq, term, src)] = t.get((eq, term, src), 0.0) + c

    for j in (1, 2, 3):
        put("E0", f"d{j}", f"E{j}", -1.0)
        put("H0", f"d{j}", f"H{j}", -1.0)
        put(f"E{j}", f"d{j}", "E0", -1.0)
        put(f"H{j}", f"d{j}", "H0", -1.0)
        for k, c in _curl(f"E{j}", "H", j).items():
            put(*k, c)
        for k, c in _curl(f"H{j}", "E", j).items():
            put(*k, -c)
    if m_terms:
        s = float(sign)
        for eq, src, c in (("E0", "H3", s), ("E1", "E2", s), ("E2", "E1", -s), ("E3", "H0", s),
                           ("H0", "E3", -s), ("H1", "H2", s), ("H2", "H1", -s), ("H3", "E0", -s)):
            put(eq, "m", src, c)
    return {k: v for k, v in t.items() if v != 0.0}


def free_maxwell_system() -> dict[tuple[str, str, str], float]:
    """``d0 E = curl H``, ``d0 H = -curl E`` on ``(E1..E3, H1..H3)``."""
    t = {}
    for j in (1, 2, 3):
        t.update(_curl(f"E{j}", "H", j))
        t.update({k: -c for k, c in _curl(f"H{j}", "E", j).items()})
    return t


def _restrict_transverse(table: dict) -> dict:
    return {k: v for k, v in table.items() if k[0] not in ("E0", "H0") and k[2] not in ("E0", "H0")}


def table_diff(derived: dict, printed: dict, label: str) -> list[dict]:
    out = []
    for key in sorted(set(derived) | set(printed)):
        d, p = derived.get(key, 0.0), printed.get(key, 0.0)
        if d != p:
            eq, term, src = key
            out.append({"table": label, "equation": f"d0 {eq}", "term": f"{term} {src}",
                        "printed": p, "derived": d})
    return out


def sign_errata(m: float = 1.0) -> list[dict]:
    """Derived-vs-printed coefficient differences for the upper-sign system and its m = 0 limit."""
    sys_m = derive_signed_system(m)
    out = table_diff(sys_m.table("upper"), printed_system(+1), "maxwell_like_upper")
    out += table_diff(sys_m.table("lower"), printed_system(-1), "maxwell_like_lower")
    free = _restrict_transverse(derive_signed_system(0.0).table())
    out += table_diff(free, free_maxwell_system(), "free_maxwell")
    return out


def free_limit_identity() -> dict[str, bool]:
    """Whether the derived ``m = 0`` transverse system equals free Maxwell, literally or time-reversed."""
    free = _restrict_transverse(derive_signed_system(0.0).table())
    ref = free_maxwell_system()
    reversed_ref = {k: -v for k, v in ref.items()}
    return {"literal": free == ref, "time_reversed": free == reversed_ref}


# -- evolution -------------------------------------------------------------------

def real_wavevectors(dims, box) -> np.ndarray:
    """Lattice wave vectors with the unpaired Nyquist entry of even axes set to zero.

    First-order symbols must satisfy ``S(-k) = conj(S(k))`` to keep real fields
    real; the Nyquist mode has no ``-k`` partner, so its derivative is dropped.
    """
    K = wavevectors(dims, box)
    for j, n in enumerate(dims):
        if n % 2 == 0:
            idx = [slice(None)] * len(dims)
            idx[j] = n // 2
            K[(j, *idx)] = 0.0
    return K


def _system_propagator(system: SignedSystem, K_vec: np.ndarray, t: float) -> np.ndarray:
    S = system.symbol(K_vec)
    dims = S.shape[2:]
    Sm = np.moveaxis(S.reshape(8, 8, -1), 2, 0)
    lam, U = np.linalg.eigh(1j * Sm)          # i S is Hermitian
    P = np.einsum("mab,mb,mcb->mac", U, np.exp(-1j * lam * t), U.conj())
    return np.moveaxis(P, 0, 2).reshape(8, 8, *dims)


def evolve_maxwell(F: FieldState, m: float, t: float, method: str = "dirac",
                   tol: float = 1e-10, check: bool = True) -> FieldState:
    """Advance the fields by ``t``.

    ``method="dirac"`` maps to the spinor, applies the 8-component propagator
    and maps back, raising :class:`SubspaceViolation` if the spinor leaves the
    image (``check=False`` reads the fields off the upper block regardless).
    ``method="system"`` applies the exact per-mode exponential of the
    extracted upper-sign real system.
    """
    if method == "dirac":
        psi = fields_to_psi(F)
        if m == 0:
            P = _massless_propagator(psi.wavevectors(), t)
            out = psi.with_data(from_kspace(np.einsum("ab...,b...->a...", P, to_kspace(psi.data))))
        else:
            out = evolve_dirac(psi, 8, m, t)
        if check:
            return FieldState(psi_to_fields(out, tol).data, F.box)
        return FieldState(_fields_from_upper(out.data[:4]).real, F.box)
    if method == "system":
        system = derive_signed_system(m)
        K = real_wavevectors(F.dims, F.box)
        ft = np.einsum("ab...,b...->a...", _system_propagator(system, K, t), to_kspace(F.data))
        return FieldState(from_kspace(ft), F.box)
    raise ValueError(f"unknown method {method!r}")


def _massless_propagator(K: np.ndarray, t: float) -> np.ndarray:
    from .evolution import dirac_hamiltonian_symbol
    H = dirac_hamiltonian_symbol(8, K, 0.0)
    dims = H.shape[2:]
    Hm = np.moveaxis(H.reshape(8, 8, -1), 2, 0)
    lam, U = np.linalg.eigh(Hm)
    P = np.einsum("mab,mb,mcb->mac", U, np.exp(-1j * lam * t), U.conj())
    return np.moveaxis(P, 0, 2).reshape(8, 8, *dims)


def dirac_image_drift(F: FieldState, m: float, t: float) -> float:
    """Image residual of the 8-component evolution of ``fields_to_psi(F)``, relative to ``max|psi|``."""
    psi = fields_to_psi(F)
    if m == 0:
        K = psi.wavevectors()
        data = from_kspace(np.einsum("ab...,b...->a...", _massless_propagator(K, t), to_kspace(psi.data)))
    else:
        data = evolve_dirac(psi, 8, m, t).data
    return image_residual(data) / max(float(np.max(np.abs(psi.data))), 1e-300)


def _spectral_rhs(system: SignedSystem, F: np.ndarray, K_vec: np.ndarray) -> np.ndarray:
    ft = to_kspace(F)
    out = np.einsum("ab...,b...->a...", system.symbol(K_vec), ft)
    return from_kspace(out).real


def rk4_maxwell(F: FieldState, m: float, t: float, dt: float) -> FieldState:
    """Classical RK4 on the extracted upper-sign system with spectral derivatives."""
    system = derive_signed_system(m)
    K = real_wavevectors(F.dims, F.box)
    n = max(1, int(np.ceil(t / dt - 1e-12)))
    h = t / n
    y = F.data.copy()
    for _ in range(n):
        k1 = _spectral_rhs(system, y, K)
        k2 = _spectral_rhs(system, y + 0.5 * h * k1, K)
        k3 = _spectral_rhs(system, y + 0.5 * h * k2, K)
        k4 = _spectral_rhs(system, y + h * k3, K)
        y = y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
    return FieldState(y, F.box)


def constraint_residual(F: FieldState, m: float) -> tuple[float, float]:
    """L2 norms of the right-hand sides of the ``E0`` and ``H0`` equations.

    With ``E0 = H0 = 0`` these are the two non-evolutionary lines of the
    reduced system, with the signs fixed by :func:`derive_signed_system`.
    """
    system = derive_signed_system(m)
    rhs = _spectral_rhs(system, F.data, real_wavevectors(F.dims, F.box))
    cv = F.cell_volume
    return (float(np.sqrt(np.sum(rhs[_IDX["E0"]] ** 2) * cv)),
            float(np.sqrt(np.sum(rhs[_IDX["H0"]] ** 2) * cv)))


def constrained_fields(dims, box, m: float, rng: np.random.Generator, kmax: float | None = None) -> FieldState:
    """Random real fields with ``E0 = H0 = 0`` and both constraint lines satisfied."""
    dims = tuple(dims)
    box = tuple(np.broadcast_to(np.atleast_1d(np.asarray(box, float)), (len(dims),)))
    system = derive_signed_system(m)
    K = real_wavevectors(dims, box)
    raw = to_kspace(rng.normal(size=(8, *dims)))
    # band limit: no Nyquist modes, so every route sees the same first-order symbol
    for j, n in enumerate(dims):
        if n % 2 == 0:
            idx = [slice(None)] * (len(dims) + 1)
            idx[j + 1] = n // 2
            raw[tuple(idx)] = 0.0
    if kmax is not None:
        raw = raw * (np.sqrt(np.sum(K * K, axis=0)) <= kmax)
    raw[[_IDX["E0"], _IDX["H0"]]] = 0.0
    S = system.symbol(K)
    rows = S[[_IDX["E0"], _IDX["H0"]]]                     # (2, 8, *dims)
    keep = [i for i in range(8) if FIELD_NAMES[i] not in ("E0", "H0")]
    C = np.moveaxis(rows[:, keep].reshape(2, 6, -1), 2, 0)  # (modes, 2, 6)
    x = np.moveaxis(raw[keep].reshape(6, -1), 1, 0)[..., None]
    # orthogonal projection onto ker C, mode by mode
    pinv = np.linalg.pinv(C, rcond=1e-12)
    x = x - pinv @ (C @ x)
    out = np.zeros_like(raw)
    out[keep] = np.moveaxis(x[..., 0], 0, 1).reshape(6, *dims)
    return FieldState(from_kspace(out), box)


def dispersion_error(system: SignedSystem, ks) -> float:
    """Largest gap between the per-mode frequencies of the system and ``sqrt(k^2 + m^2)``."""
    worst = 0.0
    for k in np.atleast_2d(ks):
        S = system.symbol(np.asarray(k, float).reshape(3))
        freqs = np.abs(np.linalg.eigvalsh(1j * S))
        worst = max(worst, float(np.max(np.abs(freqs - np.sqrt(k @ k + system.m ** 2)))))
    return worst


def mode_frequencies(F: FieldState, m: float, t_max: float, n_t: int = 64,
                     method: str = "dirac") -> tuple[np.ndarray, float, float]:
    """Frequency of the dominant Fourier mode of the evolved fields.

    A signal ``c+ e^{-iwt} + c- e^{+iwt}`` sampled at spacing ``dt`` obeys
    ``a(t+dt) + a(t-dt) = 2 cos(w dt) a(t)``; ``cos(w dt)`` is fitted by least
    squares.  Returns ``(k, w, relative recurrence residual)``; a large residual
    means the mode carries more than one frequency pair.  The Dirac route is
    read without the image check so that the multiplier frequencies are visible.
    """
    K = wavevectors(F.dims, F.box)
    ft = to_kspace(F.data)
    idx = np.unravel_index(np.argmax(np.sum(np.abs(ft) ** 2, axis=0)), F.dims)
    k = K[(slice(None), *idx)]
    ts = np.linspace(0.0, t_max, n_t)
    kw = {"check": False} if method == "dirac" else {}
    amps = np.array([to_kspace(evolve_maxwell(F, m, t, method, **kw).data)[(slice(None), *idx)] for t in ts])
    mid, side = amps[1:-1].ravel(), (amps[2:] + amps[:-2]).ravel()
    lam = float(np.real(np.vdot(mid, side) / np.vdot(mid, mid)))
    resid = float(np.linalg.norm(side - lam * mid) / np.linalg.norm(side))
    w = float(np.arccos(np.clip(lam / 2, -1.0, 1.0)) / (ts[1] - ts[0]))
    return k, w, resid


def dispersion_fit_error(F: FieldState, m: float, t_max: float = 6.0, method: str = "dirac") -> float:
    """``|w_fit - sqrt(k^2 + m^2)|`` for the dominant mode of ``F``."""
    k, w, _ = mode_frequencies(F, m, t_max, method=method)
    return abs(w - float(np.sqrt(k @ k + m * m)))


def single_mode_fields(dims, box, mode, rng: np.random.Generator) -> FieldState:
    """Real fields ``Re(c e^{ik.x})`` with random 8-vector ``c`` and ``k`` on the lattice index ``mode``."""
    from .grid import positions
    dims = tuple(dims)
    box = tuple(np.broadcast_to(np.atleast_1d(np.asarray(box, float)), (len(dims),)))
    x = positions(dims, box)
    k = np.zeros(3)
    k[:len(dims)] = [2 * np.pi * n / L for n, L in zip(mode, box)]
    phase = np.exp(1j * np.tensordot(k, x, axes=1))
    c = rng.normal(size=8) + 1j * rng.normal(size=8)
    return FieldState((c.reshape(8, *([1] * len(dims))) * phase).real, box)


def plane_wave_error(n: int = 32, L: float = 2 * np.pi, mode: int = 3, t: float = 1.7,
                     method: str = "dirac") -> float:
    """Max error of the ``m = 0`` evolution of ``E = x cos(kz - kt), H = y cos(kz - kt)`` vs the closed form."""
    from .grid import positions
    dims = (n, n, n)
    z = positions(dims, (L, L, L))[2]
    k = 2 * np.pi * mode / L

    def wave(tt):
        c = np.cos(k * z - k * tt)
        return FieldState.from_components(L, E1=c, H2=c)

    out = evolve_maxwell(wave(0.0), 0.0, t, method)
    return float(np.max(np.abs(out.data - wave(t).data)))


def constraint_history(F: FieldState, m: float, times, method: str = "system") -> np.ndarray:
    """Rows ``(t, c1, c2, energy, max|E0|, max|H0|)`` along an evolution."""
    rows = []
    for t in times:
        G = evolve_maxwell(F, m, float(t), method)
        c1, c2 = constraint_residual(G, m)
        rows.append((float(t), c1, c2, G.energy(), float(np.max(np.abs(G["E0"]))), float(np.max(np.abs(G["H0"])))))
    return np.array(rows)
