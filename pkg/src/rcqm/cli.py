"""Batch driver: ``rcqm verify``, ``rcqm evolve`` and ``rcqm maxwell``.

Exit codes: 0 all checks pass, 1 some check fails, 2 I/O error, 3 config error.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import json
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import io, maxwell, suites
from .evolution import ConservedLog, cross_rep_equivalence, evolve_rep, mean_values, transform_rep
from .grid import GridState
from .planewave import synthesize_solution
from .report import VerificationReport
from .spin_algebra import NAMED_CONFIGS, SpinConfig

EXIT_PASS, EXIT_FAIL, EXIT_IO, EXIT_CONFIG = 0, 1, 2, 3

COMMANDS = ("verify", "evolve", "maxwell")
KEYS = {
    "verify": {"suite", "spin", "mass", "tol", "out", "seed", "breve_sign"},
    "evolve": {"rep", "spin", "grid", "box", "mass", "t", "snapshots", "out_dir", "seed", "tol",
               "preset", "input", "equivalence"},
    "maxwell": {"mass", "grid", "box", "t", "snapshots", "out_dir", "seed", "tol", "data", "method",
                "kmax", "input"},
}
DEFAULTS = {
    "suite": "", "spin": "", "mass": "1.0", "tol": "", "out": "report.json", "seed": "0",
    "breve_sign": "-1", "rep": "rcqm", "grid": "64", "box": "", "t": "1.0", "snapshots": "2",
    "out_dir": "out", "preset": "gaussian", "input": "", "equivalence": "false",
    "data": "constrained", "method": "dirac", "kmax": "",
}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    values: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        unknown = set(self.values) - KEYS[self.command]
        if unknown:
            raise ConfigError(f"unknown keys for {self.command}: {sorted(unknown)}")

    def raw(self, key: str) -> str:
        return self.values.get(key, DEFAULTS[key]).strip()

    def float(self, key: str) -> float:
        try:
            return float(self.raw(key))
        except ValueError:
            raise ConfigError(f"{key} must be a number, got {self.raw(key)!r}") from None

    def int(self, key: str) -> int:
        try:
            return int(self.raw(key))
        except ValueError:
            raise ConfigError(f"{key} must be an integer, got {self.raw(key)!r}") from None

    def optional_float(self, key: str) -> float | None:
        return self.float(key) if self.raw(key) else None

    def bool(self, key: str) -> bool:
        v = self.raw(key).lower()
        if v in ("1", "true", "yes", "on"):
            return True
        if v in ("0", "false", "no", "off", ""):
            return False
        raise ConfigError(f"{key} must be a boolean, got {v!r}")

    def list(self, key: str) -> list[str]:
        return [s.strip() for s in self.raw(key).split(",") if s.strip()]

    def grid(self) -> tuple[int, ...]:
        try:
            dims = tuple(int(n) for n in self.list("grid"))
        except ValueError:
            raise ConfigError(f"grid must be integers, got {self.raw('grid')!r}") from None
        if not 1 <= len(dims) <= 3 or any(n < 1 for n in dims):
            raise ConfigError(f"grid must have 1 to 3 positive sizes, got {dims}")
        return dims

    def box(self, ndim: int) -> tuple[float, ...]:
        if not self.raw("box"):
            return (2 * np.pi * 8,) * ndim
        try:
            b = [float(x) for x in self.list("box")]
        except ValueError:
            raise ConfigError(f"box must be numbers, got {self.raw('box')!r}") from None
        if len(b) == 1:
            b = b * ndim
        if len(b) != ndim or any(x <= 0 for x in b):
            raise ConfigError(f"box needs {ndim} positive lengths, got {b}")
        return tuple(b)

    def spin(self, default: str) -> SpinConfig:
        text = self.raw("spin") or default
        try:
            return NAMED_CONFIGS[text] if text in NAMED_CONFIGS else SpinConfig.parse(text)
        except ValueError as e:
            raise ConfigError(str(e)) from None


def load_config(command: str, path: str | None, overrides: dict[str, str]) -> RunConfig:
    values: dict[str, str] = {}
    if path:
        cp = configparser.ConfigParser(interpolation=None)
        try:
            with open(path) as fh:
                cp.read_file(fh)
        except OSError as e:
            raise OSError(f"cannot read config {path}: {e}") from e
        except configparser.Error as e:
            raise ConfigError(f"malformed config {path}: {e}") from None
        for section in cp.sections():
            if section not in ("run", command):
                if section in COMMANDS:
                    continue
                raise ConfigError(f"unknown section [{section}]")
            for key, val in cp.items(section):
                values[key] = val
        if "command" in values:
            if values.pop("command") != command:
                raise ConfigError("config command does not match the requested command")
    values.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(command, values)


def _header(command: str) -> str:
    return json.dumps({"command": command, "generated": datetime.now(timezone.utc).isoformat()})


def write_report(path: Path, report: VerificationReport, command: str) -> None:
    """Header line (timestamp) followed by the deterministic JSON report on one line."""
    path.parent.mkdir(parents=True, exist_ok=True)
    body = json.dumps(report.to_dict(), sort_keys=True, default=_jsonable)
    path.write_text(_header(command) + "\n" + body + "\n")


def read_report(path) -> dict:
    lines = Path(path).read_text().splitlines()
    return json.loads(lines[1])


def _jsonable(x):
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, complex):
        return [x.real, x.imag]
    raise TypeError(f"cannot serialize {type(x).__name__}")


# -- commands ----------------------------------------------------------------------

def cmd_verify(cfg: RunConfig) -> int:
    names = cfg.list("suite")
    if not names:
        raise ConfigError("empty suite list")
    unknown = [n for n in names if n not in suites.SUITES]
    if unknown:
        raise ConfigError(f"unknown suites {unknown}")
    m = cfg.float("mass")
    if m <= 0:
        raise ConfigError("mass must be positive")
    bs = cfg.int("breve_sign")
    if bs not in (-1, 1):
        raise ConfigError("breve_sign must be -1 or 1")
    report = suites.run_suites(names, tol=cfg.optional_float("tol"), m=m, seed=cfg.int("seed"), breve_sign=bs)
    write_report(Path(cfg.raw("out")), report, "verify")
    print(report.summary())
    return EXIT_PASS if report.passed else EXIT_FAIL


def _snapshot_times(cfg: RunConfig) -> np.ndarray:
    t, k = cfg.float("t"), cfg.int("snapshots")
    if k < 1:
        raise ConfigError("snapshots must be at least 1")
    return np.array([t]) if k == 1 else np.linspace(0.0, t, k)


def cmd_evolve(cfg: RunConfig) -> int:
    rep = cfg.raw("rep")
    if rep not in ("rcqm", "fw", "dirac"):
        raise ConfigError(f"unknown representation {rep!r}")
    m = cfg.float("mass")
    if m <= 0:
        raise ConfigError("mass must be positive")
    config = cfg.spin("1/2,1/2")
    N = config.dim
    times = _snapshot_times(cfg)
    tol = cfg.optional_float("tol") or 1e-10
    out_dir = Path(cfg.raw("out_dir"))
    if cfg.raw("input"):
        state = io.read_state(cfg.raw("input"))
        if not isinstance(state, GridState) or state.ncomp != N:
            raise ConfigError(f"input state does not have {N} complex components")
    else:
        dims = cfg.grid()
        box = cfg.box(len(dims))
        preset = cfg.raw("preset")
        if preset == "gaussian":
            state = synthesize_solution(config, rep, "gaussian", dims, box, m)
        elif preset == "random":
            from .evolution import random_state
            rcqm = random_state(N, dims, box, np.random.default_rng(cfg.int("seed")), kmax=0.5 * np.pi * min(
                n / L for n, L in zip(dims, box)))
            state = transform_rep(rcqm, "rcqm", rep, N, m)
        else:
            raise ConfigError(f"unknown preset {preset!r}")
    if rep != "rcqm" and not config.is_paired:
        raise ConfigError("fw and dirac evolution need a paired particle-antiparticle spin config")
    out_dir.mkdir(parents=True, exist_ok=True)
    log = ConservedLog()
    report = VerificationReport("evolve")
    equiv_rows = []
    for i, t in enumerate(times):
        st = evolve_rep(state, rep, m, float(t))
        io.write_state(out_dir / f"snapshot_{i:04d}.rcqm", st)
        log.add(t, mean_values(st, m, rep, config))
        if cfg.bool("equivalence"):
            rc0 = transform_rep(state, rep, "rcqm", N, m) if rep != "rcqm" else state
            eq = cross_rep_equivalence(rc0, N, m, float(t), tol)
            equiv_rows.append((float(t), eq.max_residual))
            report.extend(eq, prefix=f"t={t:.6g}/")
    log.to_csv(out_dir / "conserved.csv")
    for col in ("norm", "P0", "P1", "P2", "P3"):
        report.add(f"drift/{col}", log.drift(col), 1e-11, anchor="mean values are constant in time")
    if rep == "rcqm":
        report.add("positive_energy", 0.0 if log.positive_energy(m) else 1.0, 0.5, anchor="P0 >= m norm")
    if equiv_rows:
        with open(out_dir / "equivalence.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["t", "residual"])
            w.writerows([(repr(t), repr(r)) for t, r in equiv_rows])
    write_report(out_dir / "report.json", report, "evolve")
    print(report.summary())
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_maxwell(cfg: RunConfig) -> int:
    m = cfg.float("mass")
    if m < 0:
        raise ConfigError("mass must be nonnegative")
    method = cfg.raw("method")
    if method not in ("dirac", "system"):
        raise ConfigError(f"unknown method {method!r}")
    times = _snapshot_times(cfg)
    tol = cfg.optional_float("tol") or 1e-10
    out_dir = Path(cfg.raw("out_dir"))
    data = cfg.raw("data")
    report = VerificationReport("maxwell")
    if cfg.raw("input"):
        F = io.read_state(cfg.raw("input"))
        if not isinstance(F, maxwell.FieldState):
            raise ConfigError("input is not an 8-component real field snapshot")
    else:
        dims = cfg.grid()
        box = cfg.box(len(dims))
        if data == "plane-wave":
            if len(dims) != 3 or len(set(dims)) != 1 or len(set(box)) != 1:
                raise ConfigError("plane-wave data needs a cubic 3D grid")
            z = np.arange(dims[0]) * box[0] / dims[0]
            k = 2 * np.pi * 2 / box[0]
            c = np.broadcast_to(np.cos(k * z), dims)
            F = maxwell.FieldState.from_components(box, E1=c, H2=c)
        elif data == "constrained":
            F = maxwell.constrained_fields(dims, box, m, np.random.default_rng(cfg.int("seed")),
                                           kmax=cfg.optional_float("kmax"))
        else:
            raise ConfigError(f"unknown data preset {data!r}")
    out_dir.mkdir(parents=True, exist_ok=True)
    rows, violated = [], None
    for i, t in enumerate(times):
        try:
            G = maxwell.evolve_maxwell(F, m, float(t), method, tol)
        except maxwell.SubspaceViolation as e:
            violated = (float(t), e.residual)
            break
        io.write_state(out_dir / f"fields_{i:04d}.rcqm", G)
        c1, c2 = maxwell.constraint_residual(G, m)
        rows.append((float(t), c1, c2, G.energy()))
        if data == "plane-wave" and m == 0 and not cfg.raw("input"):
            z = np.arange(F.dims[0]) * F.box[0] / F.dims[0]
            k = 2 * np.pi * 2 / F.box[0]
            c = np.broadcast_to(np.cos(k * z - k * t), F.dims)
            exact = maxwell.FieldState.from_components(F.box, E1=c, H2=c)
            report.add(f"plane_wave/t={t:.6g}", float(np.max(np.abs(G.data - exact.data))), tol,
                       anchor="massless plane wave advances with w = |k|")
    with open(out_dir / "constraints.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "c1", "c2", "energy"])
        w.writerows([tuple(repr(x) for x in r) for r in rows])
    report.add("subspace", violated[1] if violated else 0.0, tol,
               anchor="evolved spinor stays in the field-substitution image")
    if rows:
        report.add("constraints", max(max(r[1], r[2]) for r in rows), tol, anchor="constraint lines stay satisfied")
        e = np.array([r[3] for r in rows])
        report.add("energy", float(np.max(np.abs(e - e[0])) / max(e[0], 1e-300)), 1e-11,
                   anchor="field energy constant in time")
    report.errata.extend(maxwell.sign_errata(m if m > 0 else 1.0))
    write_report(out_dir / "report.json", report, "maxwell")
    print(report.summary())
    return EXIT_PASS if report.passed else EXIT_FAIL


HANDLERS = {"verify": cmd_verify, "evolve": cmd_evolve, "maxwell": cmd_maxwell}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rcqm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--config", help="INI file; keys in [run] or [%s]" % name)
        for key in sorted(KEYS[name]):
            sp.add_argument("--" + key.replace("_", "-"), dest=key, default=None)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_PASS
    overrides = {k: v for k, v in vars(args).items() if k not in ("command", "config")}
    try:
        cfg = load_config(args.command, args.config, overrides)
        return HANDLERS[args.command](cfg)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (OSError, io.FormatError) as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
