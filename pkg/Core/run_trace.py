# Core/run_trace.py
from __future__ import annotations

from datetime import datetime, timezone
from typing import Any, Dict, List


class RunTrace:
    """
    Timestamped log of suite steps. Shown in the text report and the audit
    log; never written into the JSON report.
    """
    def __init__(self) -> None:
        self._steps: List[Dict[str, Any]] = []

    def add_step(self, tag: str, description: str, metadata: Dict[str, Any] | None = None) -> None:
        self._steps.append({
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "tag": tag,
            "description": description,
            "metadata": metadata or {},
        })

    def export(self) -> List[Dict[str, Any]]:
        return list(self._steps)

    def __len__(self) -> int:
        return len(self._steps)
