"""Acceptance criteria; each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s`` or
``python tests/test_acceptance.py``.
"""

import time

import numpy as np
import pytest

from rcqm import evolution as ev
from rcqm import kspace_ops as ko
from rcqm import maxwell as mx
from rcqm import planewave, suites, tables, transitions
from rcqm.spin_algebra import NAMED_CONFIGS

LINES: list[str] = []


def _emit(label: str, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {label}: {'PASS' if ok else 'FAIL'} ({detail})"
    LINES.append(line)
    print("\n" + line, flush=True)


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def test_criterion_1_algebra():
    with _Timer() as tm:
        rep = suites.su2_suite(tol=1e-12)
    comm = max(c.residual for c in rep.checks if c.id.endswith("commutators"))
    cas = max(c.residual for c in rep.checks if c.id.endswith("casimir"))
    n_cas = sum(c.id.endswith("casimir") for c in rep.checks)
    ok = comm < 1e-12 and cas < 1e-13 and n_cas == len(tables.PRINTED_CASIMIR) and tm.elapsed < 5
    _emit("1 algebra", ok, f"su2 residual {comm:.1e} < 1e-12, casimir residual {cas:.1e} < 1e-13 "
          f"over {n_cas} printed casimirs, {tm.elapsed:.2f}s < 5s")
    assert ok


def test_criterion_2_clifford():
    with _Timer() as tm:
        rep = suites.clifford_suite(tol=1e-14)
    anti = max(c.residual for c in rep.checks if c.id.endswith("anticommutators"))
    five = next(c for c in rep.checks if c.id == "standard4/five_product").residual
    seven = max(c.residual for c in rep.checks if c.id.endswith("product_of_seven"))
    ok = anti < 1e-14 and five == 0.0 and seven == 0.0 and tm.elapsed < 1
    _emit("2 clifford", ok, f"anticommutators {anti:.1e} < 1e-14, five-product {five:.1e}, "
          f"seven-product {seven:.1e} (exact), {tm.elapsed:.2f}s < 1s")
    assert ok


def test_criterion_3_transitions():
    rep = suites.transitions_suite(tol=1e-12, m=1.0, n_samples=100)
    ks = ko.sample_momenta(100, 1.0, np.random.default_rng(0))
    assert np.all(np.linalg.norm(ks, axis=1) <= 10.0)
    worst = rep.max_residual
    ok = rep.passed and len(rep.checks) == 4 * 5
    printed_order = max(e["residual_printed_order_vs_H(-k)"] for e in rep.errata)
    _emit("3 transitions", ok, f"v involutions, V-V+ = I and V-(G0 w)V+ = G0(G.k+m) for N=4,8,12,16 at "
          f"100 k, max residual {worst:.1e} < 1e-12; printed operand order equals G0(-G.k+m) "
          f"(residual {printed_order:.1e}), recorded as erratum")
    assert ok


def test_criterion_4_covariant_spin():
    rep = suites.eigen_tables_suite(tol=1e-10)
    spin_ok = all(c.passed for c in rep.checks if c.id.startswith("N"))
    eig_ok = all(c.passed for c in rep.checks if "row" in c.id)
    errata = [e for tid in tables.COVARIANT_TABLES for e in transitions.errata_diff(tid, tol=1e-10)]
    reported = {(e["table"], e["component"], e["row"], e["col"]) for e in errata}
    # independent sweep: nothing diverges outside the reported set
    silent = 0
    rng = np.random.default_rng(99)
    for tid, (N, cfg, comps) in tables.COVARIANT_TABLES.items():
        s_D = transitions.dirac_spin_computed(N, NAMED_CONFIGS[cfg], 1.0)
        for _ in range(10):
            k = rng.uniform(-3, 3, size=3)
            comp = s_D(k)
            for j, P in transitions.dirac_spin_paper(tid, k, 1.0).items():
                for r, c in zip(*np.nonzero(np.abs(P - comp[j - 1]) > 1e-10)):
                    silent += (tid, j, r + 1, c + 1) not in reported
    ok = spin_ok and eig_ok and silent == 0 and len(errata) > 0
    _emit("4 covariant spin", ok, f"su2 and [s_D,H]=0 max {max(c.residual for c in rep.checks):.1e} < 1e-10, "
          f"{len(tables.EIGEN_TABLES)} eigenvalue tables reproduced, errata diff lists {len(errata)} elements, "
          f"{silent} silent divergences")
    assert ok


def test_criterion_5_poincare():
    with _Timer() as tm:
        pc = suites.poincare_suite(tol=1e-8, samples=20)
        cas = suites.casimir_suite(tol=1e-6)
    n_comm = sum(c.id.split("/")[-1].startswith("[") for c in pc.checks)
    n_sets = len(suites.generator_sets())
    pl = max(c.residual for c in cas.checks if c.id.endswith("pauli_lubanski"))
    ok = pc.passed and cas.passed and n_comm == 45 * n_sets and tm.elapsed < 120
    _emit("5 poincare", ok, f"{n_comm} commutators over {n_sets} generator sets, max residual "
          f"{pc.max_residual:.1e} < 1e-8; pauli-lubanski relative {pl:.1e} < 1e-6, {tm.elapsed:.1f}s < 120s")
    assert ok


def test_criterion_6_evolution():
    with _Timer() as tm:
        rng = np.random.default_rng(6)
        worst = 0.0
        cases = [((256,), (200.0,), 20.0), ((32, 32, 32), (30.0, 30.0, 30.0), 5.0)]
        for N in (4, 8):
            for dims, box, t in cases:
                st0 = ev.random_state(N, dims, box, rng, kmax=2.0)
                worst = max(worst, ev.cross_rep_equivalence(st0, N, 1.0, t).max_residual)
        drift = 0.0
        cfg = NAMED_CONFIGS["1,0,1,0"]
        st0 = ev.random_state(8, (64,), (50.0,), rng, kmax=3.0)
        for rep in ("rcqm", "fw", "dirac"):
            s = st0 if rep == "rcqm" else ev.transform_rep(st0, "rcqm", rep, 8, 1.0)
            log = ev.ConservedLog()
            for t in np.linspace(0, 100, 11):
                log.add(t, ev.mean_values(ev.evolve_rep(s, rep, 1.0, t), 1.0, rep, cfg))
            drift = max(drift, log.drift("norm"), log.drift("P0"))
        positive = 0
        for _ in range(1000):
            s = ev.random_state(2, (16,), (10.0,), rng)
            mv = ev.mean_values(s, 1.0)
            positive += mv["P0"] >= 1.0 * mv["norm"]
    ok = worst < 1e-10 and drift < 1e-11 and positive == 1000 and tm.elapsed < 60
    _emit("6 evolution", ok, f"commuting diagram {worst:.1e} < 1e-10 (1D/256, 3D/32^3, N=4,8); "
          f"norm/P0 drift {drift:.1e} < 1e-11; P0 >= m norm on {positive}/1000; {tm.elapsed:.1f}s < 60s")
    assert ok


# criterion 7 is split into its five measured claims; the overall line is printed by the last one

_C7: dict[str, bool] = {}


def test_criterion_7a_image_invariance():
    rng = np.random.default_rng(7)
    F = mx.FieldState(rng.normal(size=(8, 8, 8, 8)), 8.0)
    massive = mx.dirac_image_drift(F, 1.0, 1.0)
    massless = mx.dirac_image_drift(F, 0.0, 1.0)
    _C7["a"] = ok = massive < 1e-12 and massless < 1e-12
    _emit("7a maxwell image invariance", ok, f"m=1 residual {massive:.2e}, m=0 residual {massless:.1e}; "
          f"tolerance 1e-12")
    assert ok


def test_criterion_7b_free_limit():
    ident = mx.free_limit_identity()
    _C7["b"] = ok = ident["literal"]
    _emit("7b maxwell m=0 table identity", ok, f"literal identity {ident['literal']}, "
          f"identity after t -> -t {ident['time_reversed']}")
    assert ok


def test_criterion_7c_dispersion():
    rng = np.random.default_rng(8)
    F = mx.single_mode_fields((8, 8, 8), 8.0, (1, 2, 1), rng)
    dirac_err = mx.dispersion_fit_error(F, 1.0, method="dirac")
    system = mx.derive_signed_system(1.0)
    K = mx.real_wavevectors((8, 8, 8), (8.0,) * 3).reshape(3, -1).T[1:40]
    system_err = mx.dispersion_error(system, K)
    _C7["c"] = ok = dirac_err < 1e-9 and system_err < 1e-9
    _emit("7c maxwell dispersion", ok, f"8-component multiplier fit error {dirac_err:.1e}; "
          f"closed real system frequency error {system_err:.2e} (its modes run at |k| +- m); tolerance 1e-9")
    assert ok


def test_criterion_7d_constraints():
    rng = np.random.default_rng(9)
    F = mx.constrained_fields((16, 16, 16), 16.0, 1.0, rng, kmax=1.5)
    hist = mx.constraint_history(F, 1.0, np.linspace(0, 50, 11), method="system")
    worst = float(np.max(hist[:, 1:3]))
    _C7["d"] = ok = worst < 1e-10
    _emit("7d maxwell constraint preservation", ok, f"max constraint residual over t in [0,50] {worst:.2e} "
          f"(initial {max(hist[0, 1:3]):.1e}); tolerance 1e-10")
    assert ok


def test_criterion_7e_rk4():
    with _Timer() as tm:
        rng = np.random.default_rng(10)
        F = mx.constrained_fields((8, 8, 8), 8.0, 1.0, rng)
        K = mx.real_wavevectors(F.dims, F.box)
        wmax = float(np.sqrt(np.max(np.sum(K * K, axis=0)) + 1.0))
        a = mx.rk4_maxwell(F, 1.0, 0.2, 0.01 / wmax)
        b = mx.evolve_maxwell(F, 1.0, 0.2, "system")
        err = float(np.max(np.abs(a.data - b.data)))
    _C7["e"] = ok = err < 1e-8
    _emit("7e maxwell rk4 vs spectral", ok, f"residual {err:.1e} < 1e-8 at dt = 0.01/w_max, {tm.elapsed:.1f}s")
    ok_all = all(_C7.get(x, False) for x in "abcde")
    _emit("7 maxwell", ok_all, "all of 7a-7e" if ok_all else
          "failing: " + ",".join(x for x in "abcde" if not _C7.get(x, False)))
    assert ok


def test_criterion_8_nonrelativistic():
    slope = ev.nonrel_slope(m=1.0, t=10.0, kmin=0.01, kmax=0.1)
    ok = abs(slope - 4.0) <= 0.1
    _emit("8 nonrelativistic limit", ok, f"log-log slope {slope:.4f}, target 4 +- 0.1")
    assert ok


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
