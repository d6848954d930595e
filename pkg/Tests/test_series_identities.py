# Tests/test_series_identities.py
import pytest

from Core.checks import all_pass
from Core.errors import BudgetError, MalformedInputError
from Core.parabolic import parabolic_algebra
from Core.pbw_engine import AlgebraContext
from Core.series_identities import (
    LOW_ORDER_IDS,
    SERIES_IDENTITIES,
    SeriesWorkspace,
    bounded_compositions,
    enumerate_identity_instances,
    verify_series_identities,
    verify_series_identity,
)
from Core.shapes import Composition

Y2 = AlgebraContext(2, 3)


@pytest.fixture(scope="module")
def y2_algebra():
    return parabolic_algebra(Y2, Composition.ones(2), 4)


def test_bounded_compositions():
    assert list(bounded_compositions(5, 2, 1, 4)) == [(1, 4), (2, 3), (3, 2), (4, 1)]
    assert list(bounded_compositions(4, 2, 2, 2)) == [(2, 2)]
    assert list(bounded_compositions(0, 0, 1, 3)) == [()]
    assert list(bounded_compositions(2, 3, 1, 3)) == []


def test_workspace_cannot_exceed_algebra_order(y2_algebra):
    with pytest.raises(BudgetError):
        SeriesWorkspace(y2_algebra, 5)


def test_unknown_identity_is_rejected():
    with pytest.raises(MalformedInputError):
        enumerate_identity_instances("no-such-identity", Composition.ones(2), 1, 1)


def test_expansion_of_difference_quotient(y2_algebra):
    workspace = SeriesWorkspace(y2_algebra, 4)
    instances = enumerate_identity_instances("remark-expansion", Composition.ones(2), 0, 1)
    assert len(instances) == 4
    for x in instances:
        assert verify_series_identity("remark-expansion", x, workspace).status == "pass"


@pytest.mark.parametrize("id_", ["ee", "ef", "ed1", "ed2", "ed1-prime", "ed2-prime", "dd-series"])
def test_quadratic_identities(y2_algebra, id_):
    reports = verify_series_identities([id_], y2_algebra, 4, 0, 1)
    assert reports and all(r.status == "pass" for r in reports)


def test_full_catalog_small_scale(y2_algebra):
    reports = verify_series_identities(list(SERIES_IDENTITIES), y2_algebra, 3, 1, 2, low_order=2)
    assert all_pass(reports)
    assert {r.id for r in reports if r.status == "pass"} >= {"ee", "eee", "down", "dd-induct"}


def test_low_order_ids_are_catalogued():
    assert set(LOW_ORDER_IDS) <= set(SERIES_IDENTITIES)
