# Tests/test_reports.py
import json

import pytest
from pydantic import ValidationError

from Core.report_generator import ReportGenerator, parse_report, report_json
from Core.run_trace import RunTrace
from Core.schemas import CentralityCertificate, CheckReport, RunConfig, SuiteReport, SuiteSummary


def _report() -> SuiteReport:
    checks = [
        CheckReport(id="pr4", params={"r": 2}, status="pass"),
        CentralityCertificate(
            id="p-central", params={"label": "B[1;1,1](3)"}, status="fail",
            witness=[[[[1, 2, 1]], 1]], scope="full", budget=2, tested=1, failing_against="t11^(1)",
        ),
        CheckReport(id="pr1", params={"a": 1}, status="skipped", note="budget: truncation"),
    ]
    return SuiteReport(config=RunConfig().echo(), checks=checks).finalize()


def test_finalize_sorts_and_counts():
    report = _report()
    assert [c.id for c in report.checks] == ["p-central", "pr1", "pr4"]
    assert report.summary == SuiteSummary(pass_=1, fail=1, skipped=1)
    assert not report.passed


def test_json_uses_pass_alias_and_drops_empty_fields():
    data = json.loads(report_json(_report()))
    assert data["summary"] == {"fail": 1, "pass": 1, "skipped": 1}
    plain = next(c for c in data["checks"] if c["id"] == "pr4")
    assert "witness" not in plain and "note" not in plain
    assert data["checks"][0]["kind"] == "centrality"


def test_json_is_deterministic_and_parses_back():
    text = report_json(_report())
    assert text == report_json(_report())
    again = parse_report(text)
    assert isinstance(again.checks[0], CentralityCertificate)
    assert report_json(again) == text


def test_failing_check_needs_evidence():
    with pytest.raises(ValidationError):
        CheckReport(id="x", status="fail")
    assert CheckReport(id="x", status="fail", note="condition does not hold").note


def test_text_rendering(tmp_path):
    trace = RunTrace()
    trace.add_step("relations", "3 checks", {"pass": 1})
    generator = ReportGenerator(tmp_path)
    text = generator.render(_report(), "text", trace.export(), 1.5)
    assert "pass 1   fail 1   skipped 1" in text
    assert "against: t11^(1)" in text
    assert "note: budget: truncation" in text
    assert "[relations]" in text
    assert "wall clock 1.50s" in text
    with pytest.raises(ValueError):
        generator.render(_report(), "yaml")


def test_save_writes_default_and_explicit_paths(tmp_path):
    generator = ReportGenerator(tmp_path / "reports")
    path = generator.save(_report())
    assert path == tmp_path / "reports" / "report.json"
    assert parse_report(path.read_text(encoding="utf-8")).summary.fail == 1
    text_path = generator.save(_report(), tmp_path / "out" / "run.txt", "text")
    assert text_path.read_text(encoding="utf-8").startswith("modular Yangian verification report")


def test_run_config_validation():
    with pytest.raises(ValidationError):
        RunConfig(p=9)
    with pytest.raises(ValidationError):
        RunConfig(n=3, mu=[1, 1])
    with pytest.raises(ValidationError):
        RunConfig(suite="everything")
    with pytest.raises(ValidationError):
        RunConfig(sigma=[[0, 1]])
    config = RunConfig(n=3, mu=[1, 2], out="x.json", budgets={"centrality": 2})
    assert config.budget_for("centrality", 3) == 2
    assert config.budget_for("map_order", 4) == 4
    assert "out" not in config.echo() and "workers" not in config.echo()


def test_trace_steps_are_timestamped():
    trace = RunTrace()
    trace.add_step("config", "Validated configuration")
    assert len(trace) == 1
    step = trace.export()[0]
    assert step["tag"] == "config" and step["metadata"] == {}
    assert step["timestamp"].endswith("+00:00")
