# Tests/test_suite_runner.py
import pytest

from Core.pbw_engine import straightening_cache_info
from Core.relations import required_order
from Core.schemas import RunConfig
from Core.series_identities import coefficient_order
from Core.suite_runner import acceptance_cells, cell_label, release_caches, run_suite


def test_orders_cover_the_superscript_budget():
    assert required_order(4) == 7
    assert coefficient_order(4) == 7
    assert required_order(1) == 1


@pytest.mark.parametrize("suite", ["relations", "series-identities"])
def test_default_run_skips_nothing(suite):
    reports = run_suite(suite, RunConfig())
    assert reports
    assert [r for r in reports if r.status == "skipped"] == []
    assert [r for r in reports if r.status == "fail"] == []


def test_acceptance_grid_shapes():
    config = RunConfig()
    relations = acceptance_cells("relations", config)
    assert len(relations) == 14
    assert {"n": 2, "p": 5, "mu": [1, 1], "sigma": "0,1;0,0"} in relations
    assert {c["n"] for c in acceptance_cells("series-identities", config)} == {1, 2, 3}
    assert [c["n"] for c in acceptance_cells("gauss", config)] == [1, 2, 3, 4]
    assert cell_label(relations[0]) == "n=2 p=3 mu=2 sigma=zero"


def test_matrix_run_tags_every_report_with_its_cell():
    config = RunConfig(suite="gauss", matrix=True, budgets={"gauss_order": 2})
    reports = run_suite("gauss", config)
    cells = {r.params["cell"] for r in reports}
    assert cells == {"n=1 p=3 mu=1 sigma=zero", "n=2 p=3 mu=1,1 sigma=zero",
                     "n=3 p=3 mu=1,1,1 sigma=zero", "n=4 p=3 mu=1,1,1,1 sigma=zero"}
    assert all(r.status == "pass" for r in reports)


def test_caches_released_when_the_algebra_changes():
    small = RunConfig(n=1, mu=[1], trunc=3, budgets={"centrality": 1})
    large = RunConfig(n=2, mu=[1, 1], trunc=2, budgets={"centrality": 1})
    release_caches()
    run_suite("hc-center", large)
    cold = straightening_cache_info()["size"]
    assert cold > 0
    run_suite("hc-center", small)
    run_suite("hc-center", large)
    assert straightening_cache_info()["size"] == cold
