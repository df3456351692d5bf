"""Momentum-space operators and the Poincare commutator engine.

Conventions.  Plane waves are ``exp(-i omega t + i k.x)`` with ``k`` the
contravariant (upper-index) wave vector.  Covariant quantities are
``p_l = -k^l`` and ``x_l = -i d/dk^l`` so that ``[x_l, p_n] = i delta_ln``.
Every operator here is first order in ``d/dk``:

    q psi(k) = c0(k) psi(k) + sum_l c_l(k) d psi / dk^l

Coefficients are callables of ``k`` that also accept :class:`autodiff.Dual`
arguments, which is how commutators get their coefficient derivatives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Any, Callable, Sequence

import numpy as np

from . import autodiff as ad
from .grid import GridState, apply_multiplier
from .report import VerificationReport
from .spin_algebra import LEVI_CIVITA, SpinConfig, SpinTriple, casimir_spin, fw_block_spin, multiplet_spin

Coeff = Callable[[Any], Any]

METRIC = np.array([1.0, -1.0, -1.0, -1.0])
GENERATOR_NAMES = ("p0", "p1", "p2", "p3", "j01", "j02", "j03", "j23", "j31", "j12")
_J_INDEX = {(0, 1): "j01", (0, 2): "j02", (0, 3): "j03", (2, 3): "j23", (3, 1): "j31", (1, 2): "j12"}

# sign in front of the breve-spin boost term that closes the algebra; fixed
# by running check_poincare with both signs (the other one fails)
BREVE_SIGN = -1


def omega(k, m: float):
    """``sqrt(k.k + m^2)``; accepts duals."""
    if m < 0:
        raise ValueError("mass must be nonnegative")
    if isinstance(k, ad.Dual):
        return ad.sqrt(k @ k + m * m)
    k = np.asarray(k, dtype=float)
    return np.sqrt(np.sum(k * k, axis=0) + m * m)


def apply_sqrt_operator(state: GridState, m: float) -> GridState:
    """Fourier multiplier ``sqrt(m^2 - Laplacian)``."""
    return apply_multiplier(state, omega(state.wavevectors(), m))


def sqrt_series_coefficients(order: int) -> np.ndarray:
    """Binomial coefficients ``c_n`` of ``sqrt(1 + x) = sum c_n x^n``."""
    out = np.empty(order + 1)
    c = 1.0
    for n in range(order + 1):
        out[n] = c
        c *= (0.5 - n) / (n + 1)
    return out


def sqrt_series_symbol(k, m: float, order: int) -> np.ndarray:
    """Truncated series ``m sum c_n (k^2/m^2)^n``; converges for ``|k| < m``."""
    x = np.sum(np.asarray(k, dtype=float) ** 2, axis=0) / (m * m)
    return m * np.polynomial.polynomial.polyval(x, sqrt_series_coefficients(order))


def _spin_list(S) -> list:
    return list(S)


def breve_spin(S: SpinTriple | Sequence[np.ndarray], k, m: float) -> list:
    """``s_ln k_n / (omega + m)`` for ``l = 1, 2, 3``, i.e. ``(s x k)^l / (omega + m)``."""
    if m == 0 and np.allclose(ad.value(k), 0):
        raise ValueError("breve spin is singular at m = 0, k = 0")
    S = _spin_list(S)
    w = omega(k, m)
    out = []
    for l in range(3):
        acc = 0.0
        for n, j in itertools.product(range(3), range(3)):
            e = LEVI_CIVITA[l, n, j]
            if e:
                # s_ln = eps_lnj s^j and k_n = -k^n
                acc = acc + (-e) * k[n] * S[j]
        out.append(acc * ad.reciprocal(w + m))
    return out


@dataclass
class FirstOrderKOperator:
    """``c0(k) + t tc(k) + sum_l c[l](k) d/dk^l`` on N-component functions of k.

    ``None`` stands for a zero coefficient.
    """

    dim: int
    c0: Coeff | None
    c: tuple = (None, None, None)
    tc: Coeff | None = None
    t: float = 0.0
    label: str = ""

    def zeroth(self, k):
        out = None if self.c0 is None else self.c0(k)
        if self.tc is not None and self.t != 0.0:
            tt = self.t * self.tc(k)
            out = tt if out is None else out + tt
        return out

    def first(self, k) -> list:
        return [None if f is None else f(k) for f in self.c]

    def apply(self, f: Callable) -> Callable:
        """The function ``k -> (q f)(k)`` for a (dual-capable) function ``f``."""
        def g(k):
            val = f(k)
            c0 = self.zeroth(k)
            out = 0.0 * val if c0 is None else c0 @ val
            for l, cl in enumerate(self.first(k)):
                if cl is not None:
                    out = out + cl @ ad.partial(f, k, l)
            return out
        return g

    def at_time(self, t: float) -> "FirstOrderKOperator":
        return FirstOrderKOperator(self.dim, self.c0, self.c, self.tc, t, self.label)


def multiplication(dim: int, fn: Coeff, label: str = "") -> FirstOrderKOperator:
    return FirstOrderKOperator(dim, fn, (None, None, None), None, 0.0, label)


def position_lower(dim: int, l: int) -> FirstOrderKOperator:
    """``x_l = -i d/dk^l``."""
    c = [None, None, None]
    c[l] = lambda k: -1j * np.eye(dim)
    return FirstOrderKOperator(dim, None, tuple(c), label=f"x{l + 1}")


# -- small helpers that treat None as the zero matrix -----------------------

def _mm(a, b):
    if a is None or b is None:
        return None
    return a @ b


def _add(*terms):
    out = None
    for t in terms:
        if t is not None:
            out = t if out is None else out + t
    return out


def _neg(a):
    return None if a is None else -a


def _num(a, dim):
    return np.zeros((dim, dim), dtype=complex) if a is None else np.asarray(ad.value(a), dtype=complex)


@dataclass
class Jet:
    """Coefficients of an operator and their first k-derivatives at one point."""

    c0: Any
    c: list
    dc0: list   # dc0[n] = d c0 / dk^n
    dc: list    # dc[l][n] = d c_l / dk^n


def _derivs(fn: Callable, k) -> list:
    return [ad.partial(fn, k, n) for n in range(3)]


def jet(op: FirstOrderKOperator, k) -> Jet:
    c0 = op.zeroth(k)
    c = op.first(k)
    has0 = op.c0 is not None or (op.tc is not None and op.t != 0.0)
    dc0 = _derivs(op.zeroth, k) if has0 else [None] * 3
    dc = [(_derivs(f, k) if f is not None else [None] * 3) for f in op.c]
    return Jet(c0, c, dc0, dc)


def commutator_jets(a: Jet, b: Jet) -> tuple:
    """``[A, B]`` from jets: returns ``(c0, [c_n], second_order_max)``."""
    c0 = _add(_mm(a.c0, b.c0), _neg(_mm(b.c0, a.c0)))
    for l in range(3):
        c0 = _add(c0, _mm(a.c[l], b.dc0[l]), _neg(_mm(b.c[l], a.dc0[l])))
    cn = []
    for n in range(3):
        term = _add(_mm(a.c0, b.c[n]), _neg(_mm(b.c[n], a.c0)),
                    _mm(a.c[n], b.c0), _neg(_mm(b.c0, a.c[n])))
        for l in range(3):
            term = _add(term, _mm(a.c[l], b.dc[n][l]), _neg(_mm(b.c[l], a.dc[n][l])))
        cn.append(term)
    second = 0.0
    for l in range(3):
        for n in range(l, 3):
            s = _add(_mm(a.c[l], b.c[n]), _mm(a.c[n], b.c[l]),
                     _neg(_mm(b.c[l], a.c[n])), _neg(_mm(b.c[n], a.c[l])))
            if s is not None:
                second = max(second, float(np.max(np.abs(ad.value(s)))) / 2)
    return c0, cn, second


SECOND_ORDER_TOL = 1e-12


def commutator(a: FirstOrderKOperator, b: FirstOrderKOperator) -> FirstOrderKOperator:
    """Exact commutator; raises ``ArithmeticError`` if the second-order part survives."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")

    def evaluate(k):
        c0, cn, second = commutator_jets(jet(a, k), jet(b, k))
        scale = 1.0 + max(float(np.max(np.abs(_num(x, a.dim)))) for x in (c0, *cn))
        if second > SECOND_ORDER_TOL * scale:
            raise ArithmeticError(f"second-order terms do not cancel (residual {second:.3e})")
        return c0, cn

    zero = np.zeros((a.dim, a.dim), dtype=complex)
    c0 = lambda k: _or_zero(evaluate(k)[0], zero)
    cs = tuple((lambda k, n=n: _or_zero(evaluate(k)[1][n], zero)) for n in range(3))
    return FirstOrderKOperator(a.dim, c0, cs, label=f"[{a.label},{b.label}]")


def _or_zero(x, zero):
    return zero if x is None else x


# -- generator sets ----------------------------------------------------------

@dataclass
class GeneratorSet:
    """The ten Poincare generators of one representation, keyed by name."""

    ops: dict[str, FirstOrderKOperator]
    m: float
    rep: str
    casimir: Callable[[Any], np.ndarray]   # k -> spin Casimir expected in W / m^2
    flags: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> FirstOrderKOperator:
        return self.ops[name]

    def __iter__(self):
        return iter(self.ops.values())

    @property
    def dim(self) -> int:
        return next(iter(self.ops.values())).dim

    @property
    def hamiltonian(self) -> FirstOrderKOperator:
        return self.ops["p0"]

    def subset(self, names: Sequence[str]) -> "GeneratorSet":
        return GeneratorSet({n: self.ops[n] for n in names}, self.m, self.rep, self.casimir, dict(self.flags))


def _j(mu: int, nu: int) -> tuple[int, str | None]:
    """Sign and stored name of ``j_{mu nu}``."""
    if mu == nu:
        return 0, None
    if (mu, nu) in _J_INDEX:
        return 1, _J_INDEX[(mu, nu)]
    return -1, _J_INDEX[(nu, mu)]


def _parse(name: str) -> tuple:
    if name[0] == "p":
        return ("p", int(name[1]))
    return ("j", int(name[1]), int(name[2]))


def poincare_rhs(a: str, b: str) -> dict[str, complex]:
    """Right-hand side of ``[a, b]`` as a linear combination of generators.

    Lower-index form with ``g = diag(1, -1, -1, -1)``:
    ``[p_mu, j_rs] = i(g_mr p_s - g_ms p_r)`` and
    ``[j_mn, j_rs] = -i(g_mr j_ns + g_rn j_sm + g_ns j_mr + g_sm j_rn)``.
    """
    g = METRIC
    out: dict[str, complex] = {}

    def put(coef, name):
        if coef and name is not None:
            out[name] = out.get(name, 0) + coef

    A, B = _parse(a), _parse(b)
    if A[0] == "p" and B[0] == "p":
        return out
    if A[0] == "j" and B[0] == "p":
        return {n: -c for n, c in poincare_rhs(b, a).items()}
    if A[0] == "p":
        mu, (r, s) = A[1], B[1:]
        if mu == r:
            put(1j * g[mu], f"p{s}")
        if mu == s:
            put(-1j * g[mu], f"p{r}")
        return out
    (mu, nu), (r, s) = A[1:], B[1:]
    for gi, gj, (x, y) in ((mu, r, (nu, s)), (r, nu, (s, mu)), (nu, s, (mu, r)), (s, mu, (r, nu))):
        if gi == gj:
            sign, name = _j(x, y)
            put(-1j * g[gi] * sign, name)
    return {n: c for n, c in out.items() if c != 0}


def _scalar_eye(dim):
    return np.eye(dim, dtype=complex)


def _canonical_generators(S: Sequence[np.ndarray], gamma0: np.ndarray, m: float, t: float,
                          breve_sign: int) -> dict[str, FirstOrderKOperator]:
    """Generators ``p0 = G0 w``, ``p_l = k_l``, ``j_ln = x_l p_n - x_n p_l + s_ln``,
    ``j_0l = t p_l - 1/2 G0 {x_l, w} + sign G0 sbreve_l``."""
    dim = gamma0.shape[0]
    I = _scalar_eye(dim)
    S = [np.asarray(s, dtype=complex) for s in S]
    ops: dict[str, FirstOrderKOperator] = {}
    ops["p0"] = multiplication(dim, lambda k: omega(k, m) * gamma0, "p0")
    for l in range(3):
        ops[f"p{l + 1}"] = multiplication(dim, lambda k, l=l: -k[l] * I, f"p{l + 1}")
    for l in range(3):
        def c0(k, l=l):
            w = omega(k, m)
            # -1/2 {x_l, w} contributes +(i/2) dw/dk^l = (i/2) k^l / w
            return (0.5j * k[l] * ad.reciprocal(w)) * gamma0 + breve_sign * (gamma0 @ breve_spin(S, k, m)[l])
        c = [None, None, None]
        c[l] = lambda k: 1j * omega(k, m) * gamma0
        name = f"j0{l + 1}"
        ops[name] = FirstOrderKOperator(dim, c0, tuple(c), lambda k, l=l: -k[l] * I, t, name)
    # j_ln with (l, n) cyclic and s_ln = s^j
    for (l, n), j in (((1, 2), 0), ((2, 0), 1), ((0, 1), 2)):
        # x_l p_n - x_n p_l = i k^n d_l - i k^l d_n for l != n
        c = [None, None, None]
        c[l] = lambda k, n=n: 1j * k[n] * I
        c[n] = lambda k, l=l: -1j * k[l] * I
        name = f"j{l + 1}{n + 1}"
        ops[name] = FirstOrderKOperator(dim, lambda k, j=j: S[j], tuple(c), label=name)
    return {name: ops[name] for name in GENERATOR_NAMES}


def _config(config) -> SpinConfig:
    return SpinConfig.parse(config) if isinstance(config, str) else config


def rcqm_generators(config: SpinConfig | str, m: float, t: float = 0.0,
                    breve_sign: int = BREVE_SIGN) -> GeneratorSet:
    if m <= 0:
        raise ValueError("mass must be positive")
    config = _config(config)
    S = multiplet_spin(config)
    C = casimir_spin(S)
    ops = _canonical_generators(S, _scalar_eye(config.dim), m, t, breve_sign)
    return GeneratorSet(ops, m, "rcqm", lambda k: C, {"breve_sign": breve_sign, "config": config.label()})


def _gamma0(dim: int) -> np.ndarray:
    h = dim // 2
    return np.diag([1.0] * h + [-1.0] * h).astype(complex)


def fw_generators(config: SpinConfig | str, m: float, t: float = 0.0,
                  breve_sign: int = BREVE_SIGN) -> GeneratorSet:
    if m <= 0:
        raise ValueError("mass must be positive")
    config = _config(config)
    if not config.is_paired:
        raise ValueError("canonical-field generators need a paired particle-antiparticle config")
    S = fw_block_spin(config)
    C = casimir_spin(S)
    ops = _canonical_generators(S, _gamma0(config.dim), m, t, breve_sign)
    return GeneratorSet(ops, m, "fw", lambda k: C, {"breve_sign": breve_sign, "config": config.label()})


def conjugate_operator(q: FirstOrderKOperator, left: Coeff, right: Coeff) -> FirstOrderKOperator:
    """``L(k) q R(k)`` for pointwise matrices with ``L R = I``."""
    def c0(k):
        base = q.c0(k) if q.c0 is not None else None
        out = _mm(_mm(left(k), base), right(k)) if base is not None else None
        for l, cl in enumerate(q.c):
            if cl is not None:
                out = _add(out, left(k) @ cl(k) @ ad.partial(right, k, l))
        return out if out is not None else np.zeros((q.dim, q.dim), dtype=complex)

    c = tuple(None if cl is None else (lambda k, cl=cl: left(k) @ cl(k) @ right(k)) for cl in q.c)
    tc = None if q.tc is None else (lambda k: left(k) @ q.tc(k) @ right(k))
    return FirstOrderKOperator(q.dim, c0, c, tc, q.t, q.label)


def dirac_generators(N: int, config: SpinConfig | str | None, m: float, t: float = 0.0,
                     breve_sign: int = BREVE_SIGN) -> GeneratorSet:
    """Covariant-representation generators ``V- q_FW V+``."""
    from .transitions import DEFAULT_CONFIGS, vminus_matrix, vplus_matrix

    if N not in (4, 8, 12, 16):
        raise ValueError(f"N must be 4, 8, 12 or 16, got {N}")
    config = _config(config) if config is not None else DEFAULT_CONFIGS[N]
    if config.dim != N:
        raise ValueError(f"config {config.label()} has dimension {config.dim}, expected {N}")
    fw = fw_generators(config, m, t, breve_sign)
    left = lambda k: vminus_matrix(N, k, m)
    right = lambda k: vplus_matrix(N, k, m)
    ops = {name: conjugate_operator(q, left, right) for name, q in fw.ops.items()}
    C = fw.casimir(None)
    return GeneratorSet(ops, m, f"dirac{N}", lambda k: left(k) @ C @ right(k),
                        {"breve_sign": breve_sign, "config": config.label()})


def dirac_local_generators(m: float, t: float = 0.0) -> GeneratorSet:
    """Textbook N = 4 Dirac generators: ``p0 = H``, ``j = L + Sigma/2``,
    ``j_0l = t p_l - 1/2 {x_l, H}``.  Used only as an independent cross-check."""
    from .clifford import dirac_gammas, spin_from_gammas
    from .transitions import dirac_hamiltonian

    g = dirac_gammas(4).matrices
    I = _scalar_eye(4)
    S = spin_from_gammas(g[1:4])
    ops = _canonical_generators(S, I, m, t, 0)
    ops["p0"] = multiplication(4, lambda k: dirac_hamiltonian(4, k, m), "p0")
    for l in range(3):
        alpha = g[0] @ g[l + 1]
        c = [None, None, None]
        c[l] = lambda k: 1j * dirac_hamiltonian(4, k, m)
        name = f"j0{l + 1}"
        ops[name] = FirstOrderKOperator(4, lambda k, a=alpha: 0.5j * a, tuple(c),
                                        lambda k, l=l: -k[l] * I, t, name)
    C = casimir_spin(S)
    return GeneratorSet(ops, m, "dirac4_local", lambda k: C)


# -- verification ------------------------------------------------------------

def sample_momenta(n: int, m: float, rng: np.random.Generator, kmax: float | None = None) -> np.ndarray:
    """``n`` random k with ``|k| <= kmax`` (default ``10 m``), uniform in the ball."""
    kmax = 10 * m if kmax is None else kmax
    d = rng.normal(size=(n, 3))
    d /= np.linalg.norm(d, axis=1, keepdims=True)
    r = kmax * rng.random(n) ** (1 / 3)
    return d * r[:, None]


def _as_samples(samples, m, seed=0) -> np.ndarray:
    if isinstance(samples, (int, np.integer)):
        return sample_momenta(int(samples), m, np.random.default_rng(seed))
    return np.atleast_2d(np.asarray(samples, dtype=float))


def _combine(jets: dict[str, Jet], rhs: dict[str, complex], dim: int):
    c0 = np.zeros((dim, dim), dtype=complex)
    cn = [np.zeros((dim, dim), dtype=complex) for _ in range(3)]
    for name, coef in rhs.items():
        j = jets[name]
        c0 += coef * _num(j.c0, dim)
        for n in range(3):
            cn[n] += coef * _num(j.c[n], dim)
    return c0, cn


def check_poincare(gens: GeneratorSet, m: float | None = None, samples=20, tol: float = 1e-8,
                   seed: int = 0) -> VerificationReport:
    """All pairwise commutators against the Lie-algebra table, coefficient-wise.

    Also checks that every generator is conserved, ``i dq/dt = [p0, q]``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = gens.m if m is None else m
    ks = _as_samples(samples, m, seed)
    dim = gens.dim
    names = list(gens.ops)
    comm_res = {pair: 0.0 for pair in itertools.combinations(names, 2)}
    second = 0.0
    cons_res = {n: 0.0 for n in names}
    for k in ks:
        jets = {n: jet(gens[n], k) for n in names}
        for a, b in comm_res:
            c0, cn, sec = commutator_jets(jets[a], jets[b])
            second = max(second, sec)
            t0, tn = _combine(jets, poincare_rhs(a, b), dim)
            r = max(float(np.max(np.abs(_num(c0, dim) - t0))),
                    *(float(np.max(np.abs(_num(cn[i], dim) - tn[i]))) for i in range(3)))
            comm_res[(a, b)] = max(comm_res[(a, b)], r)
        if "p0" in jets:
            for n in names:
                c0, cn, _ = commutator_jets(jets["p0"], jets[n])
                q = gens[n]
                itc = 1j * _num(q.tc(k) if q.tc is not None else None, dim)
                r = max(float(np.max(np.abs(itc - _num(c0, dim)))),
                        *(float(np.max(np.abs(_num(x, dim)))) for x in cn))
                cons_res[n] = max(cons_res[n], r)
    rep = VerificationReport(f"poincare/{gens.rep}", flags=dict(gens.flags))
    for (a, b), r in comm_res.items():
        rep.add(f"[{a},{b}]", r, tol, anchor="poincare algebra commutation relations")
    rep.add("second_order_cancellation", second, SECOND_ORDER_TOL, anchor="first-order closure of commutators")
    if "p0" in gens.ops:
        for n, r in cons_res.items():
            rep.add(f"conserved/{n}", r, tol, anchor="generators commute with the equation operator")
    return rep


# -- Pauli-Lubanski ------------------------------------------------------------

@dataclass(frozen=True)
class TestPacket:
    """``amp (1 + a.(k - k0)) exp(-|k - k0|^2 / (2 width^2))``."""

    __test__ = False  # not a pytest class

    center: np.ndarray
    width: float
    poly: np.ndarray
    amplitude: np.ndarray

    def __post_init__(self):
        if self.width <= 0:
            raise ValueError("width must be positive")
        object.__setattr__(self, "center", np.asarray(self.center, dtype=float))
        object.__setattr__(self, "poly", np.asarray(self.poly, dtype=float))
        object.__setattr__(self, "amplitude", np.asarray(self.amplitude, dtype=complex))

    @classmethod
    def random(cls, dim: int, rng: np.random.Generator, m: float = 1.0) -> "TestPacket":
        return cls(rng.normal(scale=m, size=3), m * (0.5 + rng.random()),
                   rng.normal(scale=1 / m, size=3),
                   rng.normal(size=dim) + 1j * rng.normal(size=dim))

    def __call__(self, k):
        q = k - self.center
        env = ad.exp(-(q @ q) * (0.5 / self.width ** 2))
        return ((1.0 + q @ self.poly) * env) * self.amplitude

    def gradient(self, k) -> np.ndarray:
        """Closed-form ``d psi / dk^l``, shape ``(3, N)``."""
        q = np.asarray(k, dtype=float) - self.center
        s2 = self.width ** 2
        env = np.exp(-(q @ q) / (2 * s2))
        P = 1.0 + q @ self.poly
        g = (self.poly - P * q / s2) * env
        return g[:, None] * self.amplitude[None, :]

    def hessian(self, k) -> np.ndarray:
        """Closed-form second derivatives, shape ``(3, 3, N)``."""
        q = np.asarray(k, dtype=float) - self.center
        s2 = self.width ** 2
        env = np.exp(-(q @ q) / (2 * s2))
        P = 1.0 + q @ self.poly
        a = self.poly
        h = (-(np.outer(a, q) + np.outer(q, a)) / s2 - P * np.eye(3) / s2
             + P * np.outer(q, q) / s2 ** 2) * env
        return h[:, :, None] * self.amplitude[None, None, :]


_EPS4 = {}
for _perm in itertools.permutations(range(4)):
    _inv = sum(1 for i in range(4) for j in range(i + 1, 4) if _perm[i] > _perm[j])
    _EPS4[_perm] = -1 if _inv % 2 else 1


def pauli_lubanski_component(gens: GeneratorSet, mu: int) -> Callable[[Callable], Callable]:
    """``w^mu = 1/2 eps^{mu nu rho sigma} p_nu j_{rho sigma}`` as a map on functions."""
    terms = []
    for (a, nu, r, s), e in _EPS4.items():
        if a != mu or r > s:
            continue
        sign, name = _j(r, s)
        terms.append((e * sign, gens[f"p{nu}"], gens[name]))

    def w(f):
        applied = [(c, p.apply(j.apply(f))) for c, p, j in terms]

        def g(k):
            out = None
            for c, h in applied:
                out = _add(out, c * h(k))
            return out
        return g
    return w


def pauli_lubanski_apply(gens: GeneratorSet, f: Callable) -> Callable:
    """``W f`` with ``W = w^mu w_mu``."""
    ws = [pauli_lubanski_component(gens, mu) for mu in range(4)]
    applied = [(METRIC[mu], ws[mu](ws[mu](f))) for mu in range(4)]

    def g(k):
        out = None
        for c, h in applied:
            out = _add(out, c * h(k))
        return out
    return g


# W = w^mu w_mu equals -m^2 s^2 with the (+, -, -, -) metric
PAULI_LUBANSKI_SIGN = -1


def pauli_lubanski_check(gens: GeneratorSet, m: float | None = None, packet: TestPacket | None = None,
                         tol: float = 1e-6, points: Sequence | None = None,
                         seed: int = 0) -> VerificationReport:
    """Relative error of ``W psi`` against ``sign m^2 s^2 psi`` on a packet."""
    m = gens.m if m is None else m
    rng = np.random.default_rng(seed)
    if packet is None:
        packet = TestPacket.random(gens.dim, rng, m)
    if points is None:
        points = [packet.center + packet.width * rng.normal(size=3) * 0.5 for _ in range(3)]
    Wf = pauli_lubanski_apply(gens, packet)
    rel = 0.0
    for k in points:
        k = np.asarray(k, dtype=float)
        got = np.asarray(ad.value(Wf(k)))
        psi = packet(k)
        want = PAULI_LUBANSKI_SIGN * m * m * (gens.casimir(k) @ psi)
        scale = max(np.linalg.norm(want), m * m * np.linalg.norm(psi))
        rel = max(rel, float(np.linalg.norm(got - want) / scale))
    rep = VerificationReport(f"casimir/{gens.rep}", flags={"w_sign": PAULI_LUBANSKI_SIGN, **gens.flags})
    rep.add("pauli_lubanski", rel, tol, anchor="pauli-lubanski casimir m^2 s(s+1)")
    return rep


def mass_casimir_check(gens: GeneratorSet, samples=5, tol: float = 1e-10, seed: int = 0) -> VerificationReport:
    """``p^mu p_mu = m^2`` pointwise."""
    ks = _as_samples(samples, gens.m, seed)
    res = 0.0
    for k in ks:
        p = [np.asarray(ad.value(gens[f"p{mu}"].zeroth(k))) for mu in range(4)]
        pp = sum(METRIC[mu] * p[mu] @ p[mu] for mu in range(4))
        res = max(res, float(np.max(np.abs(pp - gens.m ** 2 * np.eye(gens.dim)))))
    rep = VerificationReport(f"casimir/{gens.rep}")
    rep.add("p_squared", res, tol, anchor="mass casimir p^2 = m^2")
    return rep
