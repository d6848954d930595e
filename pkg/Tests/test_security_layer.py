# Tests/test_security_layer.py
import logging

from Security import ProvenanceTracker, log_event


def test_config_hash_ignores_key_order():
    first = ProvenanceTracker.hash_config({"n": 2, "p": 3, "mu": [1, 1]})
    second = ProvenanceTracker.hash_config({"mu": [1, 1], "p": 3, "n": 2})
    assert first == second
    assert len(first) == 64  # SHA256 hex
    assert first != ProvenanceTracker.hash_config({"n": 2, "p": 5, "mu": [1, 1]})


def test_output_provenance(tmp_path):
    report = tmp_path / "report.json"
    report.write_text('{"checks": []}\n', encoding="utf-8")
    provenance = ProvenanceTracker.track_input({"n": 1})
    out = ProvenanceTracker.track_output(report, provenance)
    assert out["config_hash"] == provenance["config_hash"]
    assert out["file_size"] == report.stat().st_size
    assert out["output_hash"] == ProvenanceTracker.hash_file(report)


def test_audit_events_are_logged(caplog):
    with caplog.at_level(logging.INFO, logger="modyang_audit"):
        log_event("Suite started", {"suite": "gauss"})
        log_event("Suite finished", level=logging.WARNING)
    messages = [r.getMessage() for r in caplog.records]
    assert "Suite started | details: {'suite': 'gauss'}" in messages
    assert caplog.records[-1].levelno == logging.WARNING
