# main.py
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Dict, List

from pydantic import ValidationError

from Config import settings
from Core.errors import AdmissibilityError, ConfigError, MalformedInputError, ShiftMatrixError
from Core.report_generator import ReportGenerator
from Core.schemas import SUITES, RunConfig
from Core.suite_runner import SuiteRunner, build_inputs
from Security import ProvenanceTracker, log_event

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
REPORT_PATH_ENV = "MODYANG_REPORT_PATH"
USAGE_ERRORS = (ConfigError, MalformedInputError, ShiftMatrixError, AdmissibilityError)
SHAPE_KEYS = ("n", "p", "mu", "sigma")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="main.py", description="Exact checks for modular Yangians and shifted Yangians.")
    commands = parser.add_subparsers(dest="command", required=True)
    verify = commands.add_parser("verify", help="run check suites and write a report")
    verify.add_argument("--suite", choices=("all",) + SUITES)
    verify.add_argument("--n", type=int)
    verify.add_argument("--p", type=int)
    verify.add_argument("--mu", help="composition of n, e.g. 1,2")
    verify.add_argument("--sigma", help="'zero', rows like '0,1;0,0', or a file holding either")
    verify.add_argument("--trunc", type=int, help="truncation order of the series")
    verify.add_argument("--budget", type=int, help="superscript budget")
    verify.add_argument("--ell", type=int)
    verify.add_argument("--out", help=f"report path (also {REPORT_PATH_ENV})")
    verify.add_argument("--workers", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--format", choices=("json", "text"))
    verify.add_argument(
        "--matrix",
        action=argparse.BooleanOptionalAction,
        help="run every suite over its acceptance grid of n, p, mu and sigma (default: on for a plain --suite all run)",
    )
    verify.add_argument("--config", help="JSON file with any of the fields above")
    return parser


def _read_sigma(value: str) -> str | List[List[int]]:
    path = Path(value)
    if not path.is_file():
        return value
    text = path.read_text(encoding="utf-8").strip()
    if text.startswith("["):
        return json.loads(text)
    return text.replace("\n", ";")


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """YAML defaults, then the --config JSON file, then flags."""
    values: Dict[str, Any] = dict(settings["run"])
    values["budgets"] = dict(settings["budgets"])
    pinned = {key for key in SHAPE_KEYS if getattr(args, key) is not None}
    if args.config:
        try:
            overrides = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file {args.config}: {exc}") from exc
        budgets = overrides.pop("budgets", {})
        pinned.update(key for key in SHAPE_KEYS if key in overrides)
        values.update(overrides)
        values["budgets"].update(budgets)
    for key in ("suite", "n", "p", "trunc", "budget", "ell", "out", "workers", "seed", "format"):
        value = getattr(args, key)
        if value is not None:
            values[key] = value
    if args.mu is not None:
        try:
            values["mu"] = [int(part) for part in args.mu.split(",")]
        except ValueError as exc:
            raise MalformedInputError(f"cannot read composition {args.mu!r}") from exc
    elif args.n is not None and sum(values["mu"]) != args.n:
        values["mu"] = [1] * args.n
    if args.sigma is not None:
        values["sigma"] = _read_sigma(args.sigma)
    if args.matrix is not None:
        values["matrix"] = args.matrix
    elif "matrix" not in values:
        values["matrix"] = values.get("suite") == "all" and not pinned
    try:
        config = RunConfig.model_validate(values)
    except ValidationError as exc:
        raise ConfigError(str(exc)) from exc
    build_inputs(config)
    return config


def verify(args: argparse.Namespace) -> int:
    try:
        config = resolve_config(args)
    except USAGE_ERRORS as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        log_event("Rejected configuration", {"error": str(exc)})
        return EXIT_USAGE

    provenance = ProvenanceTracker.track_input(config.echo())
    log_event("Run started", {"config_hash": provenance["config_hash"], "suite": config.suite})
    runner = SuiteRunner(config)
    report = runner.run()

    generator = ReportGenerator()
    extra = {"trace": runner.trace.export(), "elapsed": runner.elapsed} if config.format == "text" else {}
    out = os.environ.get(REPORT_PATH_ENV) or config.out
    if out:
        try:
            path = generator.save(report, out, config.format, **extra)
        except OSError as exc:
            print(f"cannot write report to {out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        log_event("Report written", ProvenanceTracker.track_output(path, provenance))
        print(f"Report saved to: {path}")
    else:
        sys.stdout.write(generator.render(report, config.format, **extra))

    summary = report.summary
    print(f"pass={summary.pass_} fail={summary.fail} skipped={summary.skipped}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def main(argv: List[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return verify(args)


if __name__ == "__main__":
    sys.exit(main())
