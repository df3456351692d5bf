import pytest

from rcqm import suites


@pytest.mark.parametrize("name", ["su2", "clifford", "transitions", "spinors", "eigen-tables", "errata-diffs"])
def test_fast_suites_pass(name):
    rep = suites.run_suites([name])
    assert rep.passed, rep.failures()[:3]


def test_errata_counts():
    rep = suites.run_suites(["errata-diffs"])
    tables = [e["table"] for e in rep.errata]
    assert sum(t in ("s8_vector", "s8_spin32", "s16_third") for t in tables) == 12
    assert tables.count("position_offset") == 3
    assert sum(t.startswith("maxwell_like") or t == "free_maxwell" for t in tables) == 60


def test_transition_errata_recorded():
    rep = suites.run_suites(["transitions"])
    assert len([e for e in rep.errata if e["table"] == "transition_similarity"]) == 4


def test_merge_prefixes():
    rep = suites.run_suites(["su2", "clifford"])
    assert rep.suite == "su2+clifford"
    assert any(c.id.startswith("clifford/") for c in rep.checks)


def test_bad_suite_lists():
    with pytest.raises(ValueError):
        suites.run_suites([])
    with pytest.raises(ValueError):
        suites.run_suites(["nope"])
