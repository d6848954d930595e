# Security/__init__.py
"""
Audit trail for verification runs: the audit logger and report provenance.
"""

from .provenance_tracker import ProvenanceTracker
from .secure_audit_logs import audit_logger
from .secure_audit_logs.logger import log_event

__all__ = [
    "ProvenanceTracker",
    "audit_logger",
    "log_event",
]
