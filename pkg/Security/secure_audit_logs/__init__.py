# Security/secure_audit_logs/__init__.py
"""
Audit logging configuration; MODYANG_LOG_DIR moves the log directory.
"""
import logging
import os
from pathlib import Path

from Config import settings

LOG_DIR = Path(os.environ.get("MODYANG_LOG_DIR", settings["logging"]["directory"]))
LOG_DIR.mkdir(parents=True, exist_ok=True)

logging.basicConfig(
    filename=LOG_DIR / settings["logging"]["file_name"],
    level=getattr(logging, settings["logging"]["level"], logging.INFO),
    format="%(asctime)s | %(levelname)s | %(message)s",
)

audit_logger = logging.getLogger("modyang_audit")
