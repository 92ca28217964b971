import pytest

from lattice_humps.enumeration import Caps, OrderTooLarge
from lattice_humps.paths import FamilyKind
from lattice_humps.verify import ALIASES, SUITES, Limits, SuiteReport, bijection_failures, run_suite

SMALL = Limits(motzkin_max=6, dyck_max=5, schroeder_max=4, n_max=4, m_max=2)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_on_small_limits(name):
    report = run_suite(name, SMALL)
    assert report.suite == name
    assert report.ok and report.checked > 0, report.failures


@pytest.mark.parametrize("alias", sorted(ALIASES))
def test_aliases_resolve(alias):
    assert run_suite(alias, SMALL).suite == ALIASES[alias]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_limits_above_cap_raise():
    with pytest.raises(OrderTooLarge):
        run_suite("eq1", Limits(dyck_max=3), Caps(dyck=2))


def test_report_keeps_bounded_failure_list():
    r = SuiteReport("x")
    for i in range(50):
        r.check(i % 2 == 0, f"case {i}")
    assert r.checked == 50 and r.failure_count == 25
    assert len(r.failures) == 20 and not r.ok
    assert r.as_record()["failure_count"] == 25


def test_bijection_failures_counts_both_directions():
    checked, failures = bijection_failures(FamilyKind.DYCK, 2)
    # Three marked Dyck paths, and UUDD, UDUD, UDDU on the inverse side.
    assert failures == []
    assert checked == 3 + 3
