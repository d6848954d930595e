# Tests/test_relations.py
import pytest

from Core.checks import all_pass, compare, guarded
from Core.errors import BudgetError, MalformedInputError
from Core.parabolic import parabolic_algebra
from Core.pbw_engine import AlgebraContext
from Core.relations import (
    PRESENTATION_IDS,
    RELATIONS,
    below_shift_bound,
    enumerate_instances,
    verify_relation,
    verify_relations,
)
from Core.shapes import Composition, ShiftMatrix, shift_data

Y2 = AlgebraContext(2, 3)
Y3 = AlgebraContext(3, 3)


def test_presentation_holds_for_y2():
    alg = parabolic_algebra(Y2, Composition.ones(2), 3)
    reports = verify_relations(PRESENTATION_IDS, alg, 2)
    assert all_pass(reports)
    assert sum(r.status == "pass" for r in reports) > 40


def test_relations_needing_three_blocks():
    alg = parabolic_algebra(Y3, Composition.ones(3), 2)
    reports = verify_relations(["pr9", "pr10", "pr13", "pr14", "serre-diagonal"], alg, 2)
    assert reports and all_pass(reports)


def test_mixed_block_sizes():
    alg = parabolic_algebra(Y3, Composition((1, 2)), 3)
    reports = verify_relations(["pr3", "pr4", "pr5", "pr6", "dd-commute"], alg, 1)
    assert reports and all_pass(reports)


def test_p_fold_adjoint_coefficients_vanish():
    alg = parabolic_algebra(Y2, Composition.ones(2), 2)
    reports = verify_relations(["ad-p-e-coeff", "ad-p-d-coeff", "ad-p-f-coeff"], alg, 1)
    assert reports and all(r.status == "pass" for r in reports)


def test_instance_shapes():
    mu = Composition.ones(2)
    assert enumerate_instances("pr1", mu, 2) == [{"a": 1, "i": 1, "j": 1}, {"a": 2, "i": 1, "j": 1}]
    assert len(enumerate_instances("pr2", mu, 2)) == 6
    assert len(enumerate_instances("pr3", mu, 1)) == 4
    with pytest.raises(MalformedInputError):
        enumerate_instances("pr99", mu, 1)


def test_shifted_filter_skips_boundary_generators():
    mu = Composition.ones(2)
    data = shift_data(ShiftMatrix.parse("0,1;0,0"), mu)
    alg = parabolic_algebra(Y2, mu, 3)
    base = {"a": 1, "b": 1, "i": 1, "j": 1, "k": 1, "l": 1, "s": 1}
    report = verify_relation("pr4", {**base, "r": 1}, alg, data)
    assert report.status == "skipped"
    assert report.note.startswith("shift bound")
    assert verify_relation("pr4", {**base, "r": 2}, alg, data).status == "pass"
    assert below_shift_bound([("F", 1, 1)], data) == []


def test_every_relation_has_instances_somewhere():
    mu = Composition((1, 2, 1))
    for rel_id in RELATIONS:
        assert enumerate_instances(rel_id, mu, 2), rel_id


def test_failure_carries_witness():
    report = compare("demo", {"k": 1}, Y2.gen(1, 2, 1), Y2.zero())
    assert report.status == "fail"
    assert report.witness == [[[[1, 2, 1]], 1]]


def test_budget_overrun_is_skipped():
    def sides():
        raise BudgetError(5, 3)

    report = guarded("demo", {}, sides)
    assert report.status == "skipped"
    assert "budget" in report.note
