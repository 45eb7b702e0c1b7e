"""
Unit tests for run-time defaults, parameter parsing and report serialization.
"""

import json
from fractions import Fraction

import pytest

from src.utils.config import JOBS_ENV, default_jobs, default_point, parse_params
from src.utils.errors import NonSquare, Sl12Error
from src.utils.reports import Report, write_report


def test_parse_params_keeps_defaults():
    """Unlisted variables keep their default values."""
    at = parse_params("q=2, s=1")
    assert at.is_exact
    assert at["q"] == 2 and at["s"] == 1
    assert at["q12"] == Fraction(4, 3)


def test_parse_params_decimal_switches_to_float():
    """A decimal value puts the whole point in floating mode."""
    at = parse_params("q=1.5")
    assert not at.is_exact
    assert at["q"] == pytest.approx(1.5)
    assert at["s"] == pytest.approx(5 / 7)


@pytest.mark.parametrize("text", ["x=1", "q", "q=abc"])
def test_parse_params_rejects_bad_input(text):
    """Unknown names, missing values and garbage are all ValueErrors."""
    with pytest.raises(ValueError):
        parse_params(text)


def test_default_point_is_exact():
    """The default point uses q = 3/2, s = 5/7."""
    at = default_point()
    assert at["q"] == Fraction(3, 2) and at["s"] == Fraction(5, 7)


def test_default_jobs(monkeypatch):
    """SL12_JOBS wins when positive; anything else falls back to 1."""
    monkeypatch.setenv(JOBS_ENV, "4")
    assert default_jobs() == 4
    monkeypatch.setenv(JOBS_ENV, "0")
    assert default_jobs() == 1
    monkeypatch.setenv(JOBS_ENV, "many")
    assert default_jobs() == 1
    monkeypatch.delenv(JOBS_ENV)
    assert default_jobs() == 1


def test_error_hierarchy():
    """Domain errors are ValueErrors, and NonSquare is a dimension problem."""
    assert issubclass(Sl12Error, ValueError)
    with pytest.raises(ValueError):
        raise NonSquare("2x3")


def test_noted_cases_never_fail_a_report():
    """A failing note is recorded but leaves the report passing."""
    report = Report("demo")
    report.add("first", True)
    report.note("informational", False, ratio="q^2")
    assert report.passed
    assert report.failures() == []
    assert report.to_dict()["cases"][1]["asserted"] is False
    assert "asserted" not in report.to_dict()["cases"][0]
    report.add("second", False)
    assert not report.passed
    assert report.failures() == ["second"]
    assert report.summary() == "demo: 1/3 passed"


def test_write_report(tmp_path):
    """Reports are written with sorted keys and the run parameters."""
    good = Report("good")
    good.add("case", True, residual=0)
    bad = Report("bad")
    bad.add("case", False)
    path = write_report([good, bad], str(tmp_path / "out" / "r.json"), seed=7)
    payload = json.loads(path.read_text(encoding="utf-8"))
    assert payload["pass"] is False
    assert payload["params"] == {"seed": 7}
    assert [r["suite"] for r in payload["reports"]] == ["good", "bad"]
    assert path.read_text(encoding="utf-8") == write_report(
        [good, bad], str(tmp_path / "again.json"), seed=7
    ).read_text(encoding="utf-8")
