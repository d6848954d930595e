# Security/provenance_tracker.py
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Dict


class ProvenanceTracker:
    """
    Fingerprints of run configurations and written reports.
    """
    @staticmethod
    def hash_file(path: Path) -> str:
        sha256 = hashlib.sha256()
        with open(path, "rb") as f:
            for chunk in iter(lambda: f.read(4096), b""):
                sha256.update(chunk)
        return sha256.hexdigest()

    @staticmethod
    def hash_config(config: Dict[str, Any]) -> str:
        canonical = json.dumps(config, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    @staticmethod
    def track_input(config: Dict[str, Any]) -> Dict[str, Any]:
        return {
            "config_hash": ProvenanceTracker.hash_config(config),
            "config": config,
        }

    @staticmethod
    def track_output(report_path: Path, input_provenance: Dict[str, Any]) -> Dict[str, Any]:
        return {
            "output_hash": ProvenanceTracker.hash_file(report_path),
            "file_size": report_path.stat().st_size,
            "config_hash": input_provenance["config_hash"],
        }
