import json

import numpy as np
import pytest

from rcqm import cli, io


def _report(path):
    return cli.read_report(path)


def test_verify_pass(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["verify", "--suite", "su2", "--out", str(out)]) == 0
    rep = _report(out)
    assert rep["pass"] and rep["suite"] == "su2"
    assert set(rep["checks"][0]) == {"id", "anchor", "residual", "tol", "pass"}
    assert "generated" in json.loads(out.read_text().splitlines()[0])


def test_verify_mutation_fails(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["verify", "--suite", "poincare", "--breve-sign", "1", "--out", str(out)]) == 1
    assert not _report(out)["pass"]


def test_verify_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert cli.main(["verify", "--suite", "transitions,errata-diffs", "--seed", "7", "--out", str(p)]) == 0
    assert a.read_text().splitlines()[1] == b.read_text().splitlines()[1]


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", ""],
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "su2", "--mass", "abc"],
    ["evolve", "--rep", "nope"],
    ["maxwell", "--method", "nope"],
    ["verify", "--unknown-flag", "1"],
])
def test_config_errors(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert cli.main(argv) == 3


def test_unknown_config_key(tmp_path):
    ini = tmp_path / "c.ini"
    ini.write_text("[run]\nsuite = su2\nbogus = 1\n")
    assert cli.main(["verify", "--config", str(ini)]) == 3


def test_config_file_with_override(tmp_path):
    ini = tmp_path / "c.ini"
    ini.write_text(f"[verify]\nsuite = nope\nout = {tmp_path / 'r.json'}\n")
    assert cli.main(["verify", "--config", str(ini), "--suite", "clifford"]) == 0


def test_io_errors(tmp_path):
    assert cli.main(["verify", "--config", str(tmp_path / "missing.ini")]) == 2
    assert cli.main(["verify", "--suite", "su2", "--out", str(tmp_path / "f" / "x")]) == 0
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    assert cli.main(["verify", "--suite", "su2", "--out", str(blocker / "r.json")]) == 2


def test_evolve_zero_time_snapshot(tmp_path):
    d = tmp_path / "ev"
    args = ["evolve", "--rep", "rcqm", "--spin", "1/2", "--grid", "256", "--box", "80", "--t", "0",
            "--snapshots", "1", "--out-dir", str(d)]
    assert cli.main(args) == 0
    from rcqm.planewave import synthesize_solution
    ref = synthesize_solution("1/2", "rcqm", "gaussian", (256,), (80.0,))
    np.testing.assert_array_equal(io.read_state(d / "snapshot_0000.rcqm").data, ref.data)


def test_evolve_dirac_with_equivalence(tmp_path):
    d = tmp_path / "ev"
    args = ["evolve", "--rep", "dirac", "--spin", "1,0,1,0", "--grid", "128", "--box", "40", "--t", "5",
            "--snapshots", "3", "--equivalence", "true", "--out-dir", str(d)]
    assert cli.main(args) == 0
    rows = (d / "equivalence.csv").read_text().splitlines()[1:]
    assert len(rows) == 3 and all(float(r.split(",")[1]) < 1e-10 for r in rows)
    p0 = [float(r.split(",")[2]) for r in (d / "conserved.csv").read_text().splitlines()[1:]]
    assert max(p0) - min(p0) < 1e-9


def test_evolve_input_file(tmp_path, rng):
    from rcqm.evolution import random_state
    st = random_state(2, (32,), (10.0,), rng, kmax=3.0)
    io.write_state(tmp_path / "in.rcqm", st)
    assert cli.main(["evolve", "--spin", "1/2", "--input", str(tmp_path / "in.rcqm"),
                     "--out-dir", str(tmp_path / "o")]) == 0
    assert cli.main(["evolve", "--spin", "1", "--input", str(tmp_path / "in.rcqm"),
                     "--out-dir", str(tmp_path / "o")]) == 3


def test_maxwell_massless_constrained(tmp_path):
    d = tmp_path / "mw"
    assert cli.main(["maxwell", "--mass", "0", "--grid", "8,8,8", "--box", "8", "--t", "5",
                     "--snapshots", "3", "--out-dir", str(d)]) == 0
    rep = _report(d / "report.json")
    assert rep["errata"]
    assert io.read_state(d / "fields_0002.rcqm").data.shape == (8, 8, 8, 8)


def test_maxwell_plane_wave_reports_reversal(tmp_path):
    d = tmp_path / "mw"
    code = cli.main(["maxwell", "--mass", "0", "--data", "plane-wave", "--grid", "16,16,16",
                     "--box", str(2 * np.pi), "--t", "1", "--snapshots", "2", "--out-dir", str(d)])
    assert code == 1
    checks = {c["id"]: c for c in _report(d / "report.json")["checks"]}
    assert checks["plane_wave/t=0"]["pass"] and not checks["plane_wave/t=1"]["pass"]


def test_maxwell_massive_subspace_violation(tmp_path):
    d = tmp_path / "mw"
    assert cli.main(["maxwell", "--mass", "1", "--grid", "8,8,8", "--box", "8", "--t", "1",
                     "--snapshots", "2", "--out-dir", str(d)]) == 1
    checks = {c["id"]: c for c in _report(d / "report.json")["checks"]}
    assert not checks["subspace"]["pass"]
