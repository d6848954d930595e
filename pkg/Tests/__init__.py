# Tests/__init__.py
"""
modyang test package.

Lets pytest import the tests as a package so `Core`, `Utils`, `Security`
and `Config` resolve from the repository root.
"""

__all__ = [
    "test_pbw_engine",
    "test_series_ring",
    "test_shapes",
    "test_gauss",
    "test_parabolic",
    "test_relations",
    "test_series_identities",
    "test_current_algebra",
    "test_center",
    "test_maps",
    "test_reports",
    "test_cli",
    "test_security_layer",
    "test_modular",
]
