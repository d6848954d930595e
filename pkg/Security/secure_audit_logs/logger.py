# Security/secure_audit_logs/logger.py
from __future__ import annotations

import logging

from . import audit_logger


def log_event(event: str, details: dict | None = None, level: int = logging.INFO) -> None:
    msg = event
    if details:
        msg += f" | details: {details}"
    audit_logger.log(level, msg)
