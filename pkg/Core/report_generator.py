# Core/report_generator.py
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List

from Core.schemas import SuiteReport


def report_json(report: SuiteReport) -> str:
    """Sorted keys, no timestamps: identical runs give identical bytes."""
    return json.dumps(report.model_dump(by_alias=True, exclude_none=True), sort_keys=True, indent=2) + "\n"


def parse_report(text: str) -> SuiteReport:
    return SuiteReport.model_validate(json.loads(text))


class ReportGenerator:
    """
    Renders a SuiteReport as JSON or as a plain-text table and saves it.
    The text form also carries wall-clock time and the run trace.
    """
    def __init__(self, output_dir: str | Path = "reports") -> None:
        self.output_dir = Path(output_dir)

    def generate_text(self, report: SuiteReport, trace: List[Dict[str, Any]] | None = None, elapsed: float | None = None) -> str:
        summary = report.summary
        lines: List[str] = []

        def _add(*items: str) -> None:
            lines.extend(items)

        _add("modular Yangian verification report", "")
        for key in sorted(report.config):
            _add(f"  {key:<10} {report.config[key]}")
        _add("")
        _add(f"pass {summary.pass_}   fail {summary.fail}   skipped {summary.skipped}")
        if elapsed is not None:
            _add(f"wall clock {elapsed:.2f}s")
        _add("")

        width = max((len(check.id) for check in report.checks), default=8)
        _add(f"{'status':<8} {'check':<{width}} params")
        _add("-" * (width + 30))
        for check in report.checks:
            params = ", ".join(f"{k}={v}" for k, v in check.params.items())
            _add(f"{check.status:<8} {check.id:<{width}} {params}")
            if check.status != "pass" and check.note:
                _add(f"{'':<8} {'':<{width}} note: {check.note}")
            if check.witness is not None:
                _add(f"{'':<8} {'':<{width}} witness: {check.witness}")
            failing = getattr(check, "failing_against", None)
            if failing:
                _add(f"{'':<8} {'':<{width}} against: {failing}")

        if trace:
            _add("", "trace")
            for step in trace:
                _add(f"- [{step['tag']}] {step['timestamp']} {step['description']}")
                if step.get("metadata"):
                    _add(f"    metadata: {step['metadata']}")
        return "\n".join(lines) + "\n"

    def render(self, report: SuiteReport, fmt: str = "json", trace: List[Dict[str, Any]] | None = None, elapsed: float | None = None) -> str:
        if fmt == "json":
            return report_json(report)
        if fmt == "text":
            return self.generate_text(report, trace, elapsed)
        raise ValueError(f"unknown report format {fmt!r}")

    def save(self, report: SuiteReport, path: str | Path | None = None, fmt: str = "json", **extra: Any) -> Path:
        out_path = Path(path) if path is not None else self.output_dir / f"report.{'json' if fmt == 'json' else 'txt'}"
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(self.render(report, fmt, **extra), encoding="utf-8")
        return out_path
