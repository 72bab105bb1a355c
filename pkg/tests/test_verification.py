import json

import pytest

from monofock.logging import InvalidInputError, StructuralViolationError
from monofock.schemas import VerificationReport
from monofock.services.verification import SUITES, _run, run_suite, write_report


def test_run_maps_outcomes_to_status():
    assert _run("ok", {}, lambda: True).status == "pass"
    assert _run("bad", {}, lambda: False).status == "fail"
    flagged = _run("known", {"n": 2}, lambda: ("flagged", {"note": "printed differently"}))
    assert flagged.status == "flagged"
    assert flagged.details == {"note": "printed differently"}
    assert flagged.inputs == {"n": 2}


def test_run_turns_errors_into_failures():
    def broken():
        raise StructuralViolationError("boom", details={"where": "here"})

    result = _run("broken", {}, broken)
    assert result.status == "fail"
    assert result.details == {"error": "boom", "where": "here"}


def test_run_turns_unexpected_errors_into_failures():
    result = _run("division", {"n": 0}, lambda: 1 / 0)
    assert result.status == "fail"
    assert result.inputs == {"n": 0}
    assert result.details["type"] == "ZeroDivisionError"
    assert "division" in result.details["error"]


def test_suite_survives_a_crashing_check(monkeypatch):
    from monofock.services import verification

    def crashing_suite():
        return [
            _run("fine", {}, lambda: True),
            _run("crash", {}, lambda: {}["missing"]),
        ]

    monkeypatch.setitem(verification.SUITE_CHECKS, "fock", crashing_suite)
    report = run_suite("fock")
    assert report.passed == 1
    assert report.failed == 1


def test_unknown_suite():
    with pytest.raises(InvalidInputError):
        run_suite("everything")


def test_fock_suite_passes(tmp_path):
    report = run_suite("fock")
    assert report.suite == "fock"
    assert report.failed == 0
    assert report.passed == len(report.checks) > 0

    path = write_report(report, tmp_path / "report.json")
    loaded = VerificationReport.model_validate(json.loads(path.read_text()))
    assert loaded.passed == report.passed


@pytest.mark.slow
@pytest.mark.parametrize("suite", [s for s in SUITES if s != "fock"])
def test_other_suites_pass(suite):
    report = run_suite(suite)
    failures = [c for c in report.checks if c.status == "fail"]
    assert not failures, failures


@pytest.mark.slow
def test_binomial_suite_flags_printed_weights():
    report = run_suite("binomial")
    flagged = {c.name for c in report.checks if c.status == "flagged"}
    assert any("weight" in name for name in flagged)
