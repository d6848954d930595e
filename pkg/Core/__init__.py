# Core/__init__.py
"""
Exact verification core for modular Yangians.

Submodules are imported explicitly (``from Core.pbw_engine import Element``);
only the error hierarchy is re-exported here, since Utils depends on it.
"""
from .errors import (
    AdmissibilityError,
    BudgetError,
    ConfigError,
    ContextMismatchError,
    DegreeOverflowError,
    MalformedInputError,
    MapPreconditionError,
    MissingImageError,
    ModYangError,
    ShiftMatrixError,
    SingularSeriesError,
)

__all__ = [
    "AdmissibilityError",
    "BudgetError",
    "ConfigError",
    "ContextMismatchError",
    "DegreeOverflowError",
    "MalformedInputError",
    "MapPreconditionError",
    "MissingImageError",
    "ModYangError",
    "ShiftMatrixError",
    "SingularSeriesError",
]
