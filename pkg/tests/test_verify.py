import pytest

from ocl.verify import SUITES, VerifySuiteReport, run_all, run_suite

EXPECTED_SUITES = {
    "angles",
    "notriangles",
    "decomposition",
    "percan",
    "shell",
    "boundary",
    "increase",
    "gaussbonnet",
    "degree",
}


def test_suite_registry():
    assert set(SUITES) == EXPECTED_SUITES


@pytest.mark.parametrize("name", sorted(EXPECTED_SUITES))
def test_each_suite_passes_briefly(name):
    rep = run_suite(name, trials=12, seed=0)
    assert isinstance(rep, VerifySuiteReport)
    assert rep.suite == name and rep.trials == 12
    assert rep.ok and rep.failures == ()
    assert rep.checked >= rep.trials
    assert rep.elapsed >= 0.0


def test_suites_are_seed_deterministic():
    a = run_suite("decomposition", trials=10, seed=3)
    b = run_suite("decomposition", trials=10, seed=3)
    assert (a.checked, a.failures) == (b.checked, b.failures)


def test_run_all_covers_every_suite():
    reports = run_all(trials=6, seed=1)
    assert {r.suite for r in reports} == EXPECTED_SUITES
    assert all(r.ok for r in reports)


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("nope")
