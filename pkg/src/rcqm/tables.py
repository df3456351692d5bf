"""Literal transcriptions of printed matrices, spinors and eigenvalue tables.

Nothing here is derived: each entry is copied as printed so that it can be
diffed against independent constructions.  Numeric spin matrices are kept
in the ``[[ a & b ; c & d ; ]]`` row format and parsed by
:func:`parse_matrix`.  Momentum-dependent covariant-spin tables are stored as
element -> expression strings in the variables

    p1, p2, p3     components of k
    z, zs          p1 + i p2 and p1 - i p2
    W              Omega = omega + m
    w, m           omega and mass
    r3             sqrt(3)
    I              imaginary unit

with the product shorthands of the printed notation expanded by hand
(``p13 -> p1*p3``, ``p1122 -> p1*p1 + p2*p2``, ``2 p1 zs m W -> 2*(p1*zs + m*W)``).
"""

from __future__ import annotations

import re
from fractions import Fraction

import numpy as np

# -- numeric spin matrices ---------------------------------------------------

_ENTRY = re.compile(r"^([+-]?)(\d*)(i?)(?:\\sqrt\{(\d+)\})?$")


def parse_entry(text: str) -> complex:
    """``"0"``, ``"-1"``, ``"{ -1}"``, ``"-i"``, ``"\\sqrt{3}"``, ``"-\\sqrt{6}"`` and the like."""
    t = text.replace("{ ", "{").strip()
    if t.startswith("{") and t.endswith("}") and "sqrt" not in t:
        t = t[1:-1].strip()
    t = t.replace(" ", "")
    m = _ENTRY.match(t)
    if m is None or t in ("", "+", "-"):
        raise ValueError(f"cannot parse matrix entry {text!r}")
    sign, num, imag, root = m.groups()
    if not (num or imag or root):
        raise ValueError(f"cannot parse matrix entry {text!r}")
    val: complex = float(num) if num else 1.0
    if root:
        val *= np.sqrt(float(root))
    if imag:
        val *= 1j
    return -val if sign == "-" else val


def parse_matrix(text: str, prefactor: complex = 1.0) -> np.ndarray:
    body = text.strip()
    if not (body.startswith("[[") and body.endswith("]]")):
        raise ValueError("matrix text must be wrapped in [[ ... ]]")
    rows = [r for r in body[2:-2].split(";") if r.strip()]
    mat = [[parse_entry(e) for e in r.split("&")] for r in rows]
    n = {len(r) for r in mat}
    if len(n) != 1:
        raise ValueError("ragged matrix rows")
    return prefactor * np.array(mat, dtype=complex)


R2 = 1 / np.sqrt(2)

# (prefactor, matrix text) per component, as printed
PRINTED_SPIN = {
    "1/2": [
        (0.5, "[[ 0 & 1 ; 1 & 0 ; ]]"),
        (0.5, "[[ 0 & -i ; i & 0 ; ]]"),
        (0.5, "[[ 1 & 0 ; 0 & { -1} ; ]]"),
    ],
    "1": [
        (R2, "[[ 0 & 1 & 0 ; 1 & 0 & 1 ; 0 & 1 & 0 ; ]]"),
        (1j * R2, "[[ 0 & -1 & 0 ; 1 & 0 & -1 ; 0 & 1 & 0 ; ]]"),
        (1.0, "[[ 1 & 0 & 0 ; 0 & 0 & 0 ; 0 & 0 & -1 ; ]]"),
    ],
    "3/2": [
        (0.5, r"[[ 0 & \sqrt{3} & 0 & 0 ; \sqrt{3} & 0 & 2 & 0 ; 0 & 2 & 0 & \sqrt{3} ; 0 & 0 & \sqrt{3} & 0 ; ]]"),
        (0.5j, r"[[ 0 & -\sqrt{3} & 0 & 0 ; \sqrt{3} & 0 & -2 & 0 ; 0 & 2 & 0 & -\sqrt{3} ; 0 & 0 & \sqrt{3} & 0 ; ]]"),
        (0.5, "[[ 3 & 0 & 0 & 0 ; 0 & 1 & 0 & 0 ; 0 & 0 & -1 & 0 ; 0 & 0 & 0 & -3 ; ]]"),
    ],
    "2": [
        (0.5, r"[[ 0 & 2 & 0 & 0 & 0 ; 2 & 0 & \sqrt{6} & 0 & 0 ; 0 & \sqrt{6} & 0 & \sqrt{6} & 0 ; "
              r"0 & 0 & \sqrt{6} & 0 & 2 ; 0 & 0 & 0 & 2 & 0 ; ]]"),
        (0.5j, r"[[ 0 & -2 & 0 & 0 & 0 ; 2 & 0 & -\sqrt{6} & 0 & 0 ; 0 & \sqrt{6} & 0 & -\sqrt{6} & 0 ; "
               r"0 & 0 & \sqrt{6} & 0 & -2 ; 0 & 0 & 0 & 2 & 0 ]]"),
        (1.0, "[[ 2 & 0 & 0 & 0 & 0 ; 0 & 1 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & -1 & 0 ; "
              "0 & 0 & 0 & 0 & -2 ; ]]"),
    ],
    "1,1": [
        (R2, "[[ 0 & 1 & 0 & 0 & 0 & 0 ; 1 & 0 & 1 & 0 & 0 & 0 ; 0 & 1 & 0 & 0 & 0 & 0 ; "
             "0 & 0 & 0 & 0 & -1 & 0 ; 0 & 0 & 0 & -1 & 0 & -1 ; 0 & 0 & 0 & 0 & -1 & 0 ; ]]"),
        (R2, "[[ 0 & -i & 0 & 0 & 0 & 0 ; i & 0 & -i & 0 & 0 & 0 ; 0 & i & 0 & 0 & 0 & 0 ; "
             "0 & 0 & 0 & 0 & -i & 0 ; 0 & 0 & 0 & i & 0 & -i ; 0 & 0 & 0 & 0 & i & 0 ; ]]"),
        (1.0, "[[ 1 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & -1 & 0 & 0 & 0 ; "
              "0 & 0 & 0 & -1 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 1 ; ]]"),
    ],
    "1,0": [
        (R2, "[[ 0 & 1 & 0 & 0 ; 1 & 0 & 1 & 0 ; 0 & 1 & 0 & 0 ; 0 & 0 & 0 & 0 ; ]]"),
        (R2, "[[ 0 & -i & 0 & 0 ; i & 0 & -i & 0 ; 0 & i & 0 & 0 ; 0 & 0 & 0 & 0 ; ]]"),
        (1.0, "[[ 1 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 ; 0 & 0 & -1 & 0 ; 0 & 0 & 0 & 0 ; ]]"),
    ],
    "3/2,3/2": [
        (0.5, r"[[ 0 & \sqrt{3} & 0 & 0 & 0 & 0 & 0 & 0 ; \sqrt{3} & 0 & 2 & 0 & 0 & 0 & 0 & 0 ; "
              r"0 & 2 & 0 & \sqrt{3} & 0 & 0 & 0 & 0 ; 0 & 0 & \sqrt{3} & 0 & 0 & 0 & 0 & 0 ; "
              r"0 & 0 & 0 & 0 & 0 & -\sqrt{3} & 0 & 0 ; 0 & 0 & 0 & 0 & -\sqrt{3} & 0 & -2 & 0 ; "
              r"0 & 0 & 0 & 0 & 0 & -2 & 0 & -\sqrt{3} ; 0 & 0 & 0 & 0 & 0 & 0 & -\sqrt{3} & 0 ; ]]"),
        (0.5j, r"[[ 0 & -\sqrt{3} & 0 & 0 & 0 & 0 & 0 & 0 ; \sqrt{3} & 0 & -2 & 0 & 0 & 0 & 0 & 0 ; "
               r"0 & 2 & 0 & -\sqrt{3} & 0 & 0 & 0 & 0 ; 0 & 0 & \sqrt{3} & 0 & 0 & 0 & 0 & 0 ; "
               r"0 & 0 & 0 & 0 & 0 & -\sqrt{3} & 0 & 0 ; 0 & 0 & 0 & 0 & \sqrt{3} & 0 & -2 & 0 ; "
               r"0 & 0 & 0 & 0 & 0 & 2 & 0 & -\sqrt{3} ; 0 & 0 & 0 & 0 & 0 & 0 & \sqrt{3} & 0 ; ]]"),
        (0.5, "[[ 3 & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 1 & 0 & 0 & 0 & 0 & 0 & 0 ; "
              "0 & 0 & -1 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & -3 & 0 & 0 & 0 & 0 ; "
              "0 & 0 & 0 & 0 & -3 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & -1 & 0 & 0 ; "
              "0 & 0 & 0 & 0 & 0 & 0 & 1 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 & 0 & 3 ; ]]"),
    ],
    "2,2": [
        (0.5, r"[[ 0 & 2 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; 2 & 0 & \sqrt{6} & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; "
              r"0 & \sqrt{6} & 0 & \sqrt{6} & 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & \sqrt{6} & 0 & 2 & 0 & 0 & 0 & 0 & 0 ; "
              r"0 & 0 & 0 & 2 & 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 & -2 & 0 & 0 & 0 ; "
              r"0 & 0 & 0 & 0 & 0 & -2 & 0 & -\sqrt{6} & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 & -\sqrt{6} & 0 & -\sqrt{6} & 0 ; "
              r"0 & 0 & 0 & 0 & 0 & 0 & 0 & -\sqrt{6} & 0 & -2 ; 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & -2 & 0 ; ]]"),
        (0.5j, r"[[ 0 & -2 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; 2 & 0 & -\sqrt{6} & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; "
               r"0 & \sqrt{6} & 0 & -\sqrt{6} & 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & \sqrt{6} & 0 & -2 & 0 & 0 & 0 & 0 & 0 ; "
               r"0 & 0 & 0 & 2 & 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 & -2 & 0 & 0 & 0 ; "
               r"0 & 0 & 0 & 0 & 0 & 2 & 0 & -\sqrt{6} & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 & \sqrt{6} & 0 & -\sqrt{6} & 0 ; "
               r"0 & 0 & 0 & 0 & 0 & 0 & 0 & \sqrt{6} & 0 & -2 ; 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 2 & 0 ; ]]"),
        (1.0, "[[ 2 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 1 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; "
              "0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & -1 & 0 & 0 & 0 & 0 & 0 & 0 ; "
              "0 & 0 & 0 & 0 & -2 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & -2 & 0 & 0 & 0 & 0 ; "
              "0 & 0 & 0 & 0 & 0 & 0 & -1 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; "
              "0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 1 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 2 ; ]]"),
    ],
    "2,0": [
        (0.5, r"[[ 0 & 2 & 0 & 0 & 0 & 0 ; 2 & 0 & \sqrt{6} & 0 & 0 & 0 ; 0 & \sqrt{6} & 0 & \sqrt{6} & 0 & 0 ; "
              r"0 & 0 & \sqrt{6} & 0 & 2 & 0 ; 0 & 0 & 0 & 2 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 ; ]]"),
        (0.5j, r"[[ 0 & -2 & 0 & 0 & 0 & 0 ; 2 & 0 & -\sqrt{6} & 0 & 0 & 0 ; 0 & \sqrt{6} & 0 & -\sqrt{6} & 0 & 0 ; "
               r"0 & 0 & \sqrt{6} & 0 & -2 & 0 ; 0 & 0 & 0 & 2 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 ; ]]"),
        (1.0, "[[ 2 & 0 & 0 & 0 & 0 & 0 ; 0 & 1 & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 ; "
              "0 & 0 & 0 & -1 & 0 & 0 ; 0 & 0 & 0 & 0 & -2 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 ; ]]"),
    ],
    "2,1": [
        (R2, r"[[ 0 & \sqrt{2} & 0 & 0 & 0 & 0 & 0 & 0 ; \sqrt{2} & 0 & \sqrt{3} & 0 & 0 & 0 & 0 & 0 ; "
             r"0 & \sqrt{3} & 0 & \sqrt{3} & 0 & 0 & 0 & 0 ; 0 & 0 & \sqrt{3} & 0 & \sqrt{2} & 0 & 0 & 0 ; "
             r"0 & 0 & 0 & \sqrt{2} & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 & 1 & 0 ; "
             r"0 & 0 & 0 & 0 & 0 & 1 & 0 & 1 ; 0 & 0 & 0 & 0 & 0 & 0 & 1 & 0 ; ]]"),
        (1j * R2, r"[[ 0 & -\sqrt{2} & 0 & 0 & 0 & 0 & 0 & 0 ; \sqrt{2} & 0 & -\sqrt{3} & 0 & 0 & 0 & 0 & 0 ; "
                  r"0 & \sqrt{3} & 0 & -\sqrt{3} & 0 & 0 & 0 & 0 ; 0 & 0 & \sqrt{3} & 0 & -\sqrt{2} & 0 & 0 & 0 ; "
                  r"0 & 0 & 0 & \sqrt{2} & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 & -1 & 0 ; "
                  r"0 & 0 & 0 & 0 & 0 & 1 & 0 & -1 ; 0 & 0 & 0 & 0 & 0 & 0 & 1 & 0 ; ]]"),
        (1.0, "[[ 2 & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 1 & 0 & 0 & 0 & 0 & 0 & 0 ; "
              "0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & -1 & 0 & 0 & 0 & 0 ; "
              "0 & 0 & 0 & 0 & -2 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 1 & 0 & 0 ; "
              "0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 ; 0 & 0 & 0 & 0 & 0 & 0 & 0 & -1 ; ]]"),
    ],
}

# multiplets printed only as diag(s, -C s C) of a listed particle half
MIRRORED_SPIN = {"1/2,1/2": "1/2", "1,0,1,0": "1,0", "2,0,2,0": "2,0", "2,1,2,1": "2,1"}

# printed Casimir values: list of (multiplicity, s(s+1)) diagonal runs
PRINTED_CASIMIR = {
    "1/2": [(2, Fraction(3, 4))],
    "1": [(3, 2)],
    "3/2": [(4, Fraction(15, 4))],
    "2": [(5, 6)],
    "1/2,1/2": [(4, Fraction(3, 4))],
    "1,1": [(6, 2)],
    "1,0": [(3, 2), (1, 0)],
    "1,0,1,0": [(3, 2), (1, 0), (3, 2), (1, 0)],
    "3/2,3/2": [(8, Fraction(15, 4))],
    "2,2": [(10, 6)],
    "2,0,2,0": [(5, 6), (1, 0), (5, 6), (1, 0)],
    "2,1,2,1": [(5, 6), (3, 2), (5, 6), (3, 2)],
}


def printed_spin(name: str) -> list[np.ndarray]:
    """The printed spin triple for a named singlet or multiplet."""
    if name in PRINTED_SPIN:
        return [parse_matrix(t, c) for c, t in PRINTED_SPIN[name]]
    if name in MIRRORED_SPIN:
        half = printed_spin(MIRRORED_SPIN[name])
        n = half[0].shape[0]
        out = []
        for s in half:
            full = np.zeros((2 * n, 2 * n), dtype=complex)
            full[:n, :n] = s
            full[n:, n:] = -s.conj()
            out.append(full)
        return out
    raise KeyError(f"no printed spin matrices for {name!r}")


def printed_casimir(name: str) -> np.ndarray:
    return np.diag([float(v) for mult, v in PRINTED_CASIMIR[name] for _ in range(mult)]).astype(complex)


# -- covariant spin tables ---------------------------------------------------
# Each table: prefactor expression and {"rc": expression}; rows/cols 1-based.
# Elements absent from a dict are printed as 0.

S8_VECTOR = {
    1: ("1/(2*sqrt(2)*w*W)", {
        "11": "2*p1*p3", "12": "2*(p1*zs + m*W)", "13": "p3*zs", "14": "zs**2",
        "15": "2*I*p2*W", "16": "-2*p3*W", "17": "-z*W",
        "21": "2*(p1*z + m*W)", "22": "-2*p1*p3", "23": "W**2 - p3*p3", "24": "-p3*zs",
        "25": "2*p3*W", "26": "-2*I*p2*W", "27": "2*p3*W", "28": "zs*W",
        "31": "p3*z", "32": "W**2 - p3*p3", "35": "z*W", "36": "-2*p3*W",
        "41": "z**2", "42": "-p3*z", "46": "-z*W",
        "51": "-2*I*p2*W", "52": "2*p3*W", "53": "zs*W",
        "55": "2*p1*p3", "56": "2*(p1*zs + m*W)", "57": "p3*zs", "58": "zs**2",
        "61": "-2*p3*W", "62": "2*I*p2*W", "63": "-2*p3*W", "64": "-zs*W",
        "65": "2*(p1*z + m*W)", "66": "-2*p1*p3", "67": "W**2 - p3*p3", "68": "-p3*zs",
        "71": "-z*W", "72": "2*p3*W", "75": "p3*z", "76": "W**2 - p3*p3",
        "82": "z*W", "85": "z**2", "86": "-p3*z",
    }),
    2: ("I/(2*sqrt(2)*w*W)", {
        # 11 printed with p^{33}; 12 printed with the undefined shorthand p^3 z^* m Omega,
        # read by analogy with the defined ones as p3*zs + m*W
        "11": "-2*I*p3*p3", "12": "-2*(p3*zs + m*W)", "13": "-p3*zs", "14": "-zs**2",
        "15": "-2*p1*W", "16": "2*p3*W", "17": "zs*W",
        "21": "2*(-I*p2*z + m*W)", "22": "2*I*p2*p3", "23": "-W**2 + p3*p3", "24": "p3*zs",
        "25": "2*p3*W", "26": "2*p1*W", "27": "-2*p3*W", "28": "-zs*W",
        "31": "p3*z", "32": "W**2 - p3*p3", "35": "z*W", "36": "-2*p3*W",
        "41": "z**2", "42": "-p3*z", "46": "-z*W",
        "51": "2*p1*W", "52": "-2*p3*W", "53": "-zs*W",
        "55": "-2*I*p2*p3", "56": "-2*(I*p2*zs + m*W)", "57": "-p3*zs", "58": "-zs**2",
        "61": "-2*p3*W", "62": "-2*p1*W", "63": "2*p3*W", "64": "zs*W",
        "65": "2*(-I*p2*z + m*W)", "66": "2*I*p2*p3", "67": "-W**2 + p3*p3", "68": "p3*zs",
        "71": "-z*W", "72": "2*p3*W", "75": "p3*z", "76": "W**2 - p3*p3",
        "82": "z*W", "85": "z**2", "86": "-p3*z",
    }),
    3: ("1/(2*w*W)", {
        "11": "W**2 + p3*p3", "12": "p3*zs", "16": "zs*W",
        "21": "p3*z", "22": "p1*p1 + p2*p2", "25": "-z*W",
        "33": "-W**2 - p3*p3", "34": "-p3*zs", "38": "-zs*W",
        "43": "-p3*z", "44": "-p1*p1 - p2*p2", "47": "z*W",
        "52": "-zs*W", "55": "W**2 + p3*p3", "56": "p3*zs",
        "61": "z*W", "65": "p3*z", "66": "p1*p1 + p2*p2",
        "74": "zs*W", "77": "-W**2 - p3*p3", "78": "-p3*zs",
        "83": "-z*W", "87": "-p3*z", "88": "-p1*p1 - p2*p2",
    }),
}

S8_SPIN32 = {
    1: ("1/(2*w*W)", {
        "11": "r3*p1*p3", "12": "r3*(p1*zs + m*W)", "13": "p3*zs", "14": "zs**2",
        "15": "I*r3*p2*W", "16": "-r3*p3*W", "17": "-W*zs",
        "21": "r3*(p1*z + m*W)", "22": "-r3*p1*p3", "23": "2*m*W + p1*p1 + p2*p2", "24": "-p3*zs",
        "25": "r3*p3*W", "26": "-I*r3*p2*W", "27": "2*p3*W", "28": "zs*W",
        "31": "p3*z", "32": "2*m*W + p1*p1 + p2*p2", "33": "r3*p1*p3", "34": "r3*(p1*zs + m*W)",
        "35": "2*W*z", "36": "-2*p3*W", "37": "r3*p1*W", "38": "-r3*p3*W",
        "41": "z**2", "42": "-p3*z", "43": "r3*(p1*z + m*W)", "44": "-r3*p1*p3",
        "46": "-W*z", "47": "r3*p3*W", "48": "-I*r3*p2*W",
        "51": "-I*r3*W", "52": "r3*p3*W", "53": "W*zs",
        "55": "r3*p1*p3", "56": "r3*(p1*zs + m*W)", "57": "p3*zs", "58": "zs**2",
        "61": "-r3*p3*W", "62": "I*r3*p2*W", "63": "-2*p3*W", "64": "-W*zs",
        "65": "r3*(p1*z + m*W)", "66": "-r3*p1*p3", "67": "2*m*W + p1*p1 + p2*p2", "68": "-p3*zs",
        "71": "-W*z", "72": "2*p3*W", "73": "-I*r3*p2*W", "74": "r3*p3*W",
        "75": "p3*zs", "76": "2*m*W**2 + p1*p1 + p2*p2", "77": "r3*p1*p3", "78": "r3*(p1*zs + m*W)",
        "82": "W*z", "83": "-r3*p3*W", "84": "I*r3*p2*W",
        "85": "z**2", "86": "-p3*z", "87": "r3*(p1*z + m*W)", "88": "-r3*p1*p3",
    }),
    2: ("1/(2*w*W)", {
        # 13 is printed with a doubled minus sign, read literally as +
        "11": "r3*p2*p3", "12": "-I*r3*(m*W + I*p2*zs)", "13": "I*p3*zs", "14": "-I*zs**2",
        "15": "-I*r3*p1*W", "16": "I*r3*p3*W", "17": "I*zs*W",
        "21": "I*r3*(m*W - I*p2*z)", "22": "r3*p2*p3", "23": "-I*(W**2 - p3*p3)", "24": "I*p3*zs",
        "25": "I*r3*p3*W", "26": "I*r3*p1*W", "27": "-2*I*p3*W", "28": "-I*zs*W",
        "31": "I*p3*z", "32": "I*(W**2 - p3*p3)", "33": "r3*p2*p3", "34": "-I*r3*(m*W + I*p2*zs)",
        "35": "I*z*W", "36": "-2*I*p3*W", "37": "-I*r3*p1*W", "38": "I*r3*p3*W",
        "41": "I*z**2", "42": "-I*p3*z", "43": "I*r3*(m*W - I*p2*z)", "44": "-r3*p2*p3",
        "46": "-I*z*W", "47": "I*r3*p3*W", "48": "I*r3*p1*W",
        "51": "I*r3*p1*W", "52": "-I*r3*p3*W", "53": "-2*I*zs*W",
        "55": "r3*p2*p3", "56": "-I*r3*(m*W + I*p2*zs)", "57": "-I*p3*zs", "58": "-I*zs**2",
        "61": "-I*r3*p3*W", "62": "-I*r3*p1*W", "63": "2*I*p3*W", "64": "I*zs*W",
        "65": "I*r3*(m*W - I*p2*z)", "66": "-r3*p2*p3", "67": "-I*(W**2 - p3*p3)", "68": "I*p3*zs",
        "71": "-I*z*W", "72": "2*I*p3*W", "73": "I*r3*p1*W", "74": "-I*r3*p3*W",
        "75": "I*p3*z", "76": "I*(W**2 - p3*p3)", "77": "r3*p2*p3", "78": "-I*r3*(m*W + I*p2*zs)",
        "82": "I*z*W", "83": "-I*r3*p3*W", "84": "-I*r3*p1*W",
        "85": "I*z**2", "86": "-I*p3*z", "87": "I*r3*(m*W - I*p2*z)", "88": "-r3*p2*p3",
    }),
    3: ("1/(2*w*W)", {
        "11": "3*w*W - (p1*p1 + p2*p2)", "12": "p3*zs", "16": "zs*W",
        "21": "p3*z", "22": "w*W + p1*p1 + p2*p2", "25": "-z*W",
        "33": "-w*W - (p1*p1 + p2*p2)", "34": "p3*zs", "38": "zs*W",
        "43": "p3*z", "44": "-3*w*W + p1*p1 + p2*p2", "47": "-z*W",
        "52": "-zs*W", "55": "3*w*W - (p1*p1 + p2*p2)", "56": "p3*zs",
        "61": "z*W", "65": "p3*z", "66": "w*W + p1*p1 + p2*p2",
        "74": "-zs*W", "77": "-w*W - (p1*p1 + p2*p2)", "78": "p3*zs",
        "83": "z*W", "87": "p3*z", "88": "-3*w*W + p1*p1 + p2*p2",
    }),
}

# third component only; keys "row,col"
S16_THIRD = {
    3: ("1/(2*w*W)", {
        "1,1": "4*w*W - (p1*p1 + p2*p2)", "1,2": "p3*zs", "1,10": "zs*W",
        "2,1": "p3*z", "2,2": "2*w*W + p1*p1 + p2*p2", "2,9": "-z*W",
        "3,3": "-(p1*p1 + p2*p2)", "3,4": "p3*zs", "3,12": "zs*W",
        "4,3": "p3*z", "4,4": "W**2 - p3*p3", "4,11": "-z*W",
        "5,5": "-4*w*W + 3*(p1*p1 + p2*p2)", "5,6": "-3*p3*zs", "5,14": "-3*zs*W",
        "6,5": "-3*p3*z", "6,6": "2*w*W - 3*(p1*p1 + p2*p2)", "6,13": "3*z*W",
        "7,7": "-(p1*p1 + p2*p2)", "7,8": "p3*zs", "7,16": "zs*W",
        "8,7": "p3*z", "8,8": "-W**2 - p3*p3", "8,15": "-z*W",
        "9,2": "-zs*W", "9,9": "4*w*W - (p1*p1 + p2*p2)", "9,10": "p3*zs",
        "10,1": "z*W", "10,9": "p3*z", "10,10": "2*w*W + p1*p1 + p2*p2",
        "11,4": "-zs*W", "11,11": "-(p1*p1 + p2*p2)", "11,12": "p3*zs",
        "12,3": "z*W", "12,11": "p3*z", "12,12": "-W**2 - p3*p3",
        "13,6": "3*zs*W", "13,13": "-4*w*W + 3*(p1*p1 + p2*p2)", "13,14": "-3*p3*zs",
        "14,5": "-3*z*W", "14,13": "-3*p3*z", "14,14": "2*w*W - 3*(p1*p1 + p2*p2)",
        "15,8": "-zs*W", "15,15": "-(p1*p1 + p2*p2)", "15,16": "p3*zs",
        "16,7": "z*W", "16,15": "p3*z", "16,16": "-W**2 - p3*p3",
    }),
}

COVARIANT_TABLES = {
    "s8_vector": (8, "1,0,1,0", S8_VECTOR),
    "s8_spin32": (8, "3/2,3/2", S8_SPIN32),
    "s16_third": (16, "2,1,2,1", S16_THIRD),
}


def _namespace(k, m: float) -> dict:
    p1, p2, p3 = (float(x) for x in k)
    w = float(np.sqrt(p1 * p1 + p2 * p2 + p3 * p3 + m * m))
    return {"p1": p1, "p2": p2, "p3": p3, "z": p1 + 1j * p2, "zs": p1 - 1j * p2,
            "W": w + m, "w": w, "m": float(m), "r3": float(np.sqrt(3.0)), "I": 1j,
            "sqrt": np.sqrt}


def _eval(expr: str, ns: dict) -> complex:
    return complex(eval(expr, {"__builtins__": {}}, ns))  # trusted module-level strings only


def _index(key: str) -> tuple[int, int]:
    if "," in key:
        r, c = key.split(",")
        return int(r) - 1, int(c) - 1
    return int(key[0]) - 1, int(key[1]) - 1


def table_matrix(table_id: str, component: int, k, m: float) -> np.ndarray:
    """Evaluate one printed covariant-spin component at ``k``."""
    N, _, comps = COVARIANT_TABLES[table_id]
    if component not in comps:
        raise KeyError(f"{table_id} has no printed component {component}")
    pref, elems = comps[component]
    ns = _namespace(k, m)
    M = np.zeros((N, N), dtype=complex)
    for key, expr in elems.items():
        r, c = _index(key)
        M[r, c] = _eval(expr, ns)
    return _eval(pref, ns) * M


def table_elements(table_id: str, component: int) -> dict[tuple[int, int], str]:
    """``{(row, col): expression}`` with 1-based indices, zeros included as ``"0"``."""
    N, _, comps = COVARIANT_TABLES[table_id]
    elems = {(_index(k)[0] + 1, _index(k)[1] + 1): v for k, v in comps[component][1].items()}
    return {(r, c): elems.get((r, c), "0") for r in range(1, N + 1) for c in range(1, N + 1)}


# -- printed spinors ---------------------------------------------------------
# Each spinor: list of (1-based position, symbol) with symbols
# "W" -> omega + m, "k3" -> k^3, "k+" -> k^1 + i k^2, "k-" -> k^1 - i k^2, "-k3" -> -k^3.
# Keys are the printed labels; "minus" / "plus" give the family.

PRINTED_SPINORS = {
    4: {
        ("minus", 1): [(1, "W"), (3, "k3"), (4, "k+")],
        ("minus", 2): [(2, "W"), (3, "k-"), (4, "-k3")],
        ("plus", 3): [(1, "k3"), (2, "k+"), (3, "W")],
        ("plus", 4): [(1, "k-"), (2, "-k3"), (4, "W")],
    },
    8: {
        ("minus", 1): [(1, "W"), (5, "k3"), (6, "k+")],
        ("minus", 2): [(2, "W"), (5, "k-"), (6, "-k3")],
        ("minus", 3): [(3, "W"), (7, "k3"), (8, "k+")],
        ("minus", 4): [(4, "W"), (7, "k-"), (8, "-k3")],
        ("plus", 5): [(1, "k3"), (2, "k+"), (5, "W")],
        ("plus", 6): [(1, "k-"), (2, "-k3"), (6, "W")],
        ("plus", 7): [(3, "k3"), (4, "k+"), (7, "W")],
        ("plus", 8): [(3, "k-"), (4, "-k3"), (8, "W")],
    },
    12: {
        ("minus", 1): [(1, "W"), (7, "k3"), (10, "k+")],
        ("minus", 2): [(2, "W"), (8, "k3"), (11, "k+")],
        ("minus", 3): [(3, "W"), (9, "k3"), (12, "k+")],
        ("minus", 4): [(4, "W"), (7, "k-"), (10, "-k3")],
        ("minus", 5): [(5, "W"), (8, "k-"), (11, "-k3")],
        ("minus", 6): [(6, "W"), (9, "k-"), (12, "-k3")],
        ("plus", 7): [(1, "k3"), (4, "k+"), (7, "W")],
        ("plus", 8): [(2, "k3"), (5, "k+"), (8, "W")],
        ("plus", 9): [(3, "k3"), (6, "k+"), (9, "W")],
        ("plus", 10): [(1, "k-"), (4, "-k3"), (10, "W")],
        ("plus", 11): [(2, "k-"), (5, "-k3"), (11, "W")],
        ("plus", 12): [(3, "k-"), (6, "-k3"), (12, "W")],
    },
    16: {
        ("minus", 1): [(1, "W"), (9, "k3"), (10, "k+")],
        ("minus", 2): [(2, "W"), (9, "k-"), (10, "-k3")],
        ("minus", 3): [(3, "W"), (11, "k3"), (12, "k+")],
        ("minus", 4): [(4, "W"), (11, "k-"), (12, "-k3")],
        ("minus", 5): [(5, "W"), (13, "k3"), (14, "k+")],
        ("minus", 6): [(6, "W"), (13, "k-"), (14, "-k3")],
        ("minus", 7): [(7, "W"), (15, "k3"), (16, "k+")],
        ("minus", 8): [(8, "W"), (15, "k-"), (16, "-k3")],
        ("plus", 9): [(1, "k3"), (2, "k+"), (9, "W")],
        ("plus", 10): [(1, "k-"), (2, "-k3"), (10, "W")],
        ("plus", 11): [(3, "k3"), (4, "k+"), (11, "W")],
        ("plus", 12): [(3, "k-"), (4, "-k3"), (12, "W")],
        # printed with a missing separator after k^1 + i k^2; the 16-entry
        # column is recovered by the pattern of its neighbours
        ("plus", 13): [(5, "k3"), (6, "k+"), (13, "W")],
        ("plus", 14): [(5, "k-"), (6, "-k3"), (14, "W")],
        ("plus", 15): [(7, "k3"), (8, "k+"), (15, "W")],
        ("plus", 16): [(7, "k-"), (8, "-k3"), (16, "W")],
    },
}


def printed_spinor(N: int, family: str, label: int, k, m: float) -> np.ndarray:
    k1, k2, k3 = (float(x) for x in k)
    w = np.sqrt(k1 * k1 + k2 * k2 + k3 * k3 + m * m)
    sym = {"W": w + m, "k3": k3, "-k3": -k3, "k+": k1 + 1j * k2, "k-": k1 - 1j * k2}
    v = np.zeros(N, dtype=complex)
    for pos, s in PRINTED_SPINORS[N][(family, label)]:
        v[pos - 1] = sym[s]
    return v / np.sqrt(2 * w * (w + m))


# -- eigenvalue tables --------------------------------------------------------
# s^3 x = lambda x.  "rcqm" and "fw" rows act on the Cartesian orts d_i with
# the multiplet spin and the block spin diag(s, s); "dirac" rows act on the
# printed spinors with V- s V+ (evaluated at -k for the "plus" family).

_H = Fraction(1, 2)
_T = Fraction(3, 2)

EIGEN_TABLES = {
    "rcqm_1/2": ("rcqm", "1/2", [_H, -_H]),
    "rcqm_1": ("rcqm", "1", [1, 0, -1]),
    "rcqm_3/2": ("rcqm", "3/2", [_T, _H, -_H, -_T]),
    "rcqm_2": ("rcqm", "2", [2, 1, 0, -1, -2]),
    "rcqm_1/2,1/2": ("rcqm", "1/2,1/2", [_H, -_H, -_H, _H]),
    "rcqm_1,1": ("rcqm", "1,1", [1, 0, -1, -1, 0, 1]),
    "rcqm_1,0": ("rcqm", "1,0", [1, 0, -1, 0]),
    "rcqm_1,0,1,0": ("rcqm", "1,0,1,0", [1, 0, -1, 0, -1, 0, 1, 0]),
    "rcqm_3/2,3/2": ("rcqm", "3/2,3/2", [_T, _H, -_H, -_T, -_T, -_H, _H, _T]),
    "rcqm_2,2": ("rcqm", "2,2", [2, 1, 0, -1, -2, -2, -1, 0, 1, 2]),
    "rcqm_2,0,2,0": ("rcqm", "2,0,2,0", [2, 1, 0, -1, -2, 0, -2, -1, 0, 1, 2, 0]),
    "rcqm_2,1,2,1": ("rcqm", "2,1,2,1", [2, 1, 0, -1, -2, 1, 0, -1, -2, -1, 0, 1, 2, -1, 0, 1]),
    "fw_1/2,1/2": ("fw", "1/2,1/2", [_H, -_H, _H, -_H]),
    "fw_1,1": ("fw", "1,1", [1, 0, -1, 1, 0, -1]),
    "fw_1,0,1,0": ("fw", "1,0,1,0", [1, 0, -1, 0, 1, 0, -1, 0]),
    "fw_3/2,3/2": ("fw", "3/2,3/2", [_T, _H, -_H, -_T, _T, _H, -_H, -_T]),
    "fw_2,2": ("fw", "2,2", [2, 1, 0, -1, -2, 2, 1, 0, -1, -2]),
    "fw_2,0,2,0": ("fw", "2,0,2,0", [2, 1, 0, -1, -2, 0, 2, 1, 0, -1, -2, 0]),
    "fw_2,1,2,1": ("fw", "2,1,2,1", [2, 1, 0, -1, -2, 1, 0, -1, 2, 1, 0, -1, -2, 1, 0, -1]),
    "dirac_1/2,1/2": ("dirac", "1/2,1/2", [_H, -_H, _H, -_H]),
    "dirac_1,0,1,0": ("dirac", "1,0,1,0", [1, 0, -1, 0, 1, 0, -1, 0]),
    "dirac_3/2,3/2": ("dirac", "3/2,3/2", [_T, _H, -_H, -_T, _T, _H, -_H, -_T]),
    "dirac_2,0,2,0": ("dirac", "2,0,2,0", [2, 1, 0, -1, -2, 0, 2, 1, 0, -1, -2, 0]),
    "dirac_2,1,2,1": ("dirac", "2,1,2,1", [2, 1, 0, -1, -2, 1, 0, -1, 2, 1, 0, -1, -2, 1, 0, -1]),
}


def spinor_labels(N: int) -> list[tuple[str, int]]:
    """Printed (family, label) pairs in column order."""
    return sorted(PRINTED_SPINORS[N], key=lambda fl: fl[1])
