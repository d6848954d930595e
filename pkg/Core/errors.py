# Core/errors.py
from __future__ import annotations

from typing import Tuple


class ModYangError(Exception):
    """Base class for every error raised by the toolkit."""


class MalformedInputError(ModYangError, ValueError):
    pass


class ContextMismatchError(ModYangError):
    pass


class BudgetError(ModYangError):
    """A coefficient beyond the truncation order was requested."""

    def __init__(self, requested: int, available: int, what: str = "coefficient") -> None:
        super().__init__(f"{what} of order {requested} requested, truncation order is {available}")
        self.requested = requested
        self.available = available


class SingularSeriesError(ModYangError):
    pass


class ShiftMatrixError(ModYangError, ValueError):
    def __init__(self, triple: Tuple[int, int, int], message: str) -> None:
        super().__init__(message)
        self.triple = triple


class AdmissibilityError(ModYangError, ValueError):
    def __init__(self, i: int, j: int, message: str) -> None:
        super().__init__(message)
        self.i = i
        self.j = j


class MissingImageError(ModYangError, KeyError):
    pass


class DegreeOverflowError(ModYangError):
    pass


class MapPreconditionError(ModYangError):
    pass


class ConfigError(ModYangError):
    pass
