"""SU(2) spin generators for singlets and particle-antiparticle multiplets."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.linalg import block_diag

from .report import VerificationReport

PARTICLE = "particle"
ANTIPARTICLE = "antiparticle"

# Levi-Civita symbol, eps[j, l, n]
LEVI_CIVITA = np.zeros((3, 3, 3))
for _j, _l, _n in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    LEVI_CIVITA[_j, _l, _n] = 1.0
    LEVI_CIVITA[_l, _j, _n] = -1.0


@dataclass(frozen=True)
class SpinConfig:
    """Ordered spin sectors; each entry is ``(twice_spin, sector)``."""

    entries: tuple[tuple[int, str], ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("SpinConfig needs at least one entry")
        for ts, sector in self.entries:
            if int(ts) != ts or ts < 0:
                raise ValueError(f"twice_spin must be a nonnegative integer, got {ts!r}")
            if sector not in (PARTICLE, ANTIPARTICLE):
                raise ValueError(f"unknown sector {sector!r}")

    @property
    def dim(self) -> int:
        return sum(ts + 1 for ts, _ in self.entries)

    @property
    def block_dims(self) -> list[int]:
        return [ts + 1 for ts, _ in self.entries]

    @property
    def has_antiparticles(self) -> bool:
        return any(sec == ANTIPARTICLE for _, sec in self.entries)

    @property
    def is_paired(self) -> bool:
        """True for a particle half followed by a mirror antiparticle half."""
        n = len(self.entries)
        if n % 2:
            return False
        top, bottom = self.entries[: n // 2], self.entries[n // 2:]
        return (all(sec == PARTICLE for _, sec in top)
                and all(sec == ANTIPARTICLE for _, sec in bottom)
                and [ts for ts, _ in top] == [ts for ts, _ in bottom])

    def particle_half(self) -> "SpinConfig":
        if not self.is_paired:
            raise ValueError("config is not a paired particle-antiparticle multiplet")
        return SpinConfig(self.entries[: len(self.entries) // 2])

    @classmethod
    def singlet(cls, twice_spin: int) -> "SpinConfig":
        return cls(((twice_spin, PARTICLE),))

    @classmethod
    def doublet(cls, *twice_spins: int) -> "SpinConfig":
        """Particle sectors ``twice_spins`` followed by the matching antiparticles."""
        return cls(tuple((t, PARTICLE) for t in twice_spins)
                   + tuple((t, ANTIPARTICLE) for t in twice_spins))

    @classmethod
    def parse(cls, text: str) -> "SpinConfig":
        """Parse strings such as ``"1/2"``, ``"1,0"``, ``"3/2,3/2"`` or ``"1+,1-"``.

        Entries may carry an explicit ``+`` (particle) or ``-`` (antiparticle)
        mark.  Without marks, a list whose second half repeats its first half is
        read as particle/antiparticle pairs; anything else is all-particle.
        """
        items = [s.strip() for s in text.split(",") if s.strip()]
        if not items:
            raise ValueError("empty spin configuration")
        spins, marks = [], []
        for item in items:
            m = re.fullmatch(r"(\d+)(?:/(\d+))?([+-]?)", item)
            if m is None:
                raise ValueError(f"cannot parse spin entry {item!r}")
            s = Fraction(int(m.group(1)), int(m.group(2) or 1))
            if (2 * s).denominator != 1:
                raise ValueError(f"spin must be a multiple of 1/2, got {item!r}")
            spins.append(int(2 * s))
            marks.append(m.group(3))
        if any(marks):
            if not all(marks):
                raise ValueError("either mark every entry with +/- or none")
            sectors = [PARTICLE if mk == "+" else ANTIPARTICLE for mk in marks]
        else:
            n = len(spins)
            paired = n % 2 == 0 and spins[: n // 2] == spins[n // 2:]
            sectors = ([PARTICLE] * (n // 2) + [ANTIPARTICLE] * (n // 2)) if paired else [PARTICLE] * n
        return cls(tuple(zip(spins, sectors)))

    def label(self) -> str:
        parts = []
        for ts, sec in self.entries:
            s = f"{ts // 2}" if ts % 2 == 0 else f"{ts}/2"
            parts.append(s + ("+" if sec == PARTICLE else "-"))
        return ",".join(parts)


@dataclass(frozen=True)
class SpinTriple:
    s1: np.ndarray
    s2: np.ndarray
    s3: np.ndarray

    def __iter__(self):
        return iter((self.s1, self.s2, self.s3))

    def __getitem__(self, j: int) -> np.ndarray:
        return (self.s1, self.s2, self.s3)[j]

    @property
    def dim(self) -> int:
        return self.s1.shape[0]

    def as_array(self) -> np.ndarray:
        return np.stack([self.s1, self.s2, self.s3])


def su2_generators(twice_spin: int) -> SpinTriple:
    """Condon-Shortley spin matrices with ``s3 = diag(s, s-1, ..., -s)``."""
    if twice_spin < 0:
        raise ValueError("twice_spin must be nonnegative")
    s = twice_spin / 2.0
    m = s - np.arange(twice_spin + 1)
    # <m+1| s+ |m> = sqrt(s(s+1) - m(m+1)), placed above the diagonal
    c = np.sqrt(s * (s + 1) - m[1:] * (m[1:] + 1))
    splus = np.diag(c, 1).astype(complex)
    sminus = splus.conj().T
    s1 = (splus + sminus) / 2
    s2 = (splus - sminus) / 2j
    s3 = np.diag(m).astype(complex)
    return SpinTriple(s1, s2, s3)


def multiplet_spin(config: SpinConfig) -> SpinTriple:
    """Block-diagonal multiplet spin; antiparticle blocks are ``-conj(s)``."""
    blocks = [[], [], []]
    for ts, sector in config.entries:
        trip = su2_generators(ts)
        for j in range(3):
            blocks[j].append(trip[j] if sector == PARTICLE else -trip[j].conj())
    return SpinTriple(*(np.asarray(block_diag(*b), dtype=complex) for b in blocks))


def fw_block_spin(config: SpinConfig) -> SpinTriple:
    """Canonical-field spin: the particle-half spin repeated on both halves."""
    half = multiplet_spin(config.particle_half())
    return SpinTriple(*(np.asarray(block_diag(s, s), dtype=complex) for s in half))


def casimir_spin(S: SpinTriple | Sequence[np.ndarray]) -> np.ndarray:
    return sum(s @ s for s in S)


def su2_residual(S: SpinTriple | Sequence[np.ndarray]) -> float:
    """Largest entry of ``[s^j, s^l] - i eps^{jln} s^n`` over all pairs."""
    S = list(S)
    res = 0.0
    for j in range(3):
        for l in range(3):
            rhs = sum(1j * LEVI_CIVITA[j, l, n] * S[n] for n in range(3))
            res = max(res, np.max(np.abs(S[j] @ S[l] - S[l] @ S[j] - rhs)))
    return float(res)


def check_su2(S: SpinTriple | Sequence[np.ndarray], tol: float = 1e-12,
              label: str = "su2") -> VerificationReport:
    if tol <= 0:
        raise ValueError("tol must be positive")
    rep = VerificationReport(label)
    rep.add("commutators", su2_residual(S), tol, anchor="su2 commutation relations")
    herm = max(float(np.max(np.abs(s - s.conj().T))) for s in S)
    rep.add("hermiticity", herm, tol, anchor="hermitian spin components")
    return rep


def casimir_blocks(config: SpinConfig) -> np.ndarray:
    """Expected diagonal ``s_i(s_i + 1)`` for each block of ``config``."""
    vals = []
    for ts, _ in config.entries:
        s = ts / 2.0
        vals.extend([s * (s + 1)] * (ts + 1))
    return np.diag(vals).astype(complex)


def charge_sign(config: SpinConfig) -> np.ndarray:
    """Charge-sign matrix ``g``: -1 on particle blocks, +1 on antiparticle blocks.

    For all-particle configs this gives ``-I``, which is a convention rather
    than a derived operator; see :func:`charge_sign_is_conventional`.
    """
    d = []
    for ts, sector in config.entries:
        d.extend([-1.0 if sector == PARTICLE else 1.0] * (ts + 1))
    return np.diag(d).astype(complex)


def charge_sign_is_conventional(config: SpinConfig) -> bool:
    return not config.has_antiparticles


def helicity_eigenvalues(S: SpinTriple | Sequence[np.ndarray], k: Iterable[float]) -> np.ndarray:
    """Sorted eigenvalues of ``s . k/|k|``."""
    k = np.asarray(k, dtype=float)
    nk = np.linalg.norm(k)
    if nk == 0:
        raise ValueError("helicity is undefined at k = 0")
    h = sum(kj * s for kj, s in zip(k / nk, S))
    return np.sort(np.linalg.eigvalsh(h))[::-1]


# the singlets and multiplets treated explicitly, keyed by their printed labels
NAMED_CONFIGS: dict[str, SpinConfig] = {
    "1/2": SpinConfig.singlet(1),
    "1": SpinConfig.singlet(2),
    "3/2": SpinConfig.singlet(3),
    "2": SpinConfig.singlet(4),
    "1/2,1/2": SpinConfig.doublet(1),
    "1,1": SpinConfig.doublet(2),
    "1,0": SpinConfig(((2, PARTICLE), (0, PARTICLE))),
    "1,0,1,0": SpinConfig.doublet(2, 0),
    "3/2,3/2": SpinConfig.doublet(3),
    "2,2": SpinConfig.doublet(4),
    "2,0": SpinConfig(((4, PARTICLE), (0, PARTICLE))),
    "2,1": SpinConfig(((4, PARTICLE), (2, PARTICLE))),
    "2,0,2,0": SpinConfig.doublet(4, 0),
    "2,1,2,1": SpinConfig.doublet(4, 2),
}
