# Core/checks.py
"""Turning (lhs, rhs) pairs into CheckReport records."""
from __future__ import annotations

import logging
from typing import Any, Callable, Dict, Iterable, Tuple

from Core.errors import BudgetError
from Core.pbw_engine import Element
from Core.schemas import CheckReport
from Core.series_ring import BivariateSeries, SeriesMatrix, TruncatedSeries

logger = logging.getLogger(__name__)

Params = Dict[str, Any]


def _difference_witness(lhs: Any, rhs: Any) -> list | None:
    if isinstance(lhs, Element):
        diff = lhs - rhs
        return None if diff.is_zero() else diff.serialize()
    if isinstance(lhs, TruncatedSeries):
        diff = lhs - rhs
        r = diff.valuation()
        return None if r is None else [["order", r], diff.coeff(r).serialize()]
    if isinstance(lhs, BivariateSeries):
        first = lhs.first_difference(rhs)
        return None if first is None else [["orders", list(first[0])], first[1].serialize()]
    if isinstance(lhs, SeriesMatrix):
        for i in range(1, lhs.rows + 1):
            for j in range(1, lhs.cols + 1):
                inner = _difference_witness(lhs.at(i, j), rhs.at(i, j))
                if inner is not None:
                    return [["entry", [i, j]]] + inner
        return None
    raise TypeError(f"cannot compare values of type {type(lhs).__name__}")


def compare(check_id: str, params: Params, lhs: Any, rhs: Any) -> CheckReport:
    """pass iff lhs == rhs exactly; on failure the first nonzero difference is attached."""
    witness = _difference_witness(lhs, rhs)
    if witness is None:
        return CheckReport(id=check_id, params=params, status="pass")
    logger.warning("check %s failed at %s", check_id, params)
    return CheckReport(id=check_id, params=params, status="fail", witness=witness)


def truth(check_id: str, params: Params, ok: bool, note: str | None = None) -> CheckReport:
    if ok:
        return CheckReport(id=check_id, params=params, status="pass")
    return CheckReport(id=check_id, params=params, status="fail", note=note or "condition does not hold")


def skipped(check_id: str, params: Params, note: str) -> CheckReport:
    return CheckReport(id=check_id, params=params, status="skipped", note=note)


def guarded(check_id: str, params: Params, sides: Callable[[], Tuple[Any, Any]]) -> CheckReport:
    """Evaluate both sides; a coefficient past the truncation order is a skip, not a failure."""
    try:
        lhs, rhs = sides()
    except BudgetError as exc:
        return skipped(check_id, params, f"budget: {exc}")
    return compare(check_id, params, lhs, rhs)


def all_pass(reports: Iterable[CheckReport]) -> bool:
    return all(r.status != "fail" for r in reports)
