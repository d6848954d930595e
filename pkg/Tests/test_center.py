# Tests/test_center.py
import pytest

from Core.center import (
    b_series,
    centrality_check,
    expected_b,
    factorized_c,
    gr_leading_check,
    hc_center_checks,
    hc_series,
    leading_terms_distinct,
    p_center_budget,
    p_center_checks,
    p_center_generators,
    p_central_series,
    quantum_determinant,
    s_series,
    verify_factorization,
)
from Core.checks import all_pass
from Core.current_algebra import current_context
from Core.errors import MalformedInputError
from Core.parabolic import parabolic_algebra
from Core.pbw_engine import AlgebraContext
from Core.series_ring import SeriesMatrix
from Core.shapes import Composition, ShiftMatrix, compositions, shift_data

Y1 = AlgebraContext(1, 3)
Y2 = AlgebraContext(2, 3)


def test_quantum_determinant_of_y2():
    qdet = quantum_determinant(SeriesMatrix.rtt(Y2, 2))
    g = Y2.gen
    assert qdet.coeff(1) == g(1, 1, 1) + g(2, 2, 1)
    expected = g(1, 1, 2) + g(2, 2, 2) + g(2, 2, 1) + g(1, 1, 1) * g(2, 2, 1) - g(2, 1, 1) * g(1, 2, 1)
    assert qdet.coeff(2) == expected


def test_c_from_diagonal_matches_quantum_determinant():
    c = hc_series("c", Y2, 2)
    assert c.coeff(1) == Y2.gen(1, 1, 1) + Y2.gen(2, 2, 1)
    assert c.series == quantum_determinant(SeriesMatrix.rtt(Y2, 2))


@pytest.mark.parametrize("mu", list(compositions(3)), ids=str)
def test_factorization_through_blocks(mu):
    y3 = AlgebraContext(3, 3)
    assert verify_factorization(y3, mu, 2).status == "pass"
    assert factorized_c(y3, mu, 2) == hc_series("c", y3, 2).series


def test_unknown_series_kind():
    with pytest.raises(MalformedInputError):
        hc_series("d", Y2, 2)
    with pytest.raises(MalformedInputError):
        p_central_series("R", parabolic_algebra(Y2, Composition.ones(2), 2), [1, 1, 1])


def test_b_series_for_y1():
    alg = parabolic_algebra(Y1, Composition.ones(1), 3)
    b = b_series(alg, 1, 1, 1)
    t1 = Y1.gen(1, 1, 1)
    assert b.coeff(1).is_zero() and b.coeff(2).is_zero()
    assert b.coeff(3) == t1 ** 3 - t1
    assert b.label == "B[1;1,1]"
    expected = expected_b(current_context(1, 3), alg.mu, 1, 1, 1, 1)
    assert gr_leading_check("demo", {}, b.coeff(3), expected, 0).status == "pass"


def test_gr_check_reports_degree_overflow():
    report = gr_leading_check("demo", {}, Y2.gen(1, 2, 3), Y2.zero(), 1)
    assert report.status == "fail"
    assert report.note.startswith("degree overflow")


def test_centrality_certificates():
    report = centrality_check("demo", {}, Y2.gen(1, 2, 1), 2)
    assert report.status == "fail"
    assert report.failing_against == "t11^(1)"
    assert report.tested == 1
    assert report.scope == "full"
    ok = centrality_check("demo", {}, Y2.unit(), 2)
    assert ok.status == "pass" and ok.tested == 8


def test_s_series_coefficients_are_central():
    s = s_series(Y2, 1, 2, 3).series
    assert s.coeff(1).is_zero() and s.coeff(2).is_zero()
    assert centrality_check("demo", {}, s.coeff(3), 2).status == "pass"


def test_p_center_generator_labels():
    mu = Composition.ones(2)
    alg = parabolic_algebra(Y2, mu, 3)
    labels = [g.label for g in p_center_generators(alg, shift_data(ShiftMatrix.zero(2), mu), 3)]
    assert labels == ["B[1;1,1](3)", "B[2;1,1](3)", "sE[1,2;1,1](1)^p", "sF[2,1;1,1](1)^p"]
    shifted = p_center_generators(alg, shift_data(ShiftMatrix.parse("0,1;0,0"), mu), 3)
    assert [g.label for g in shifted] == ["B[1;1,1](3)", "B[2;1,1](3)", "sF[2,1;1,1](1)^p"]
    assert leading_terms_distinct(shifted).status == "pass"


def test_hc_center_suite_body():
    reports = hc_center_checks(Y2, 3, 2)
    assert all_pass(reports)
    assert {r.id for r in reports} == {"hc-factorization", "hc-central", "bc-central", "bc-gr"}


def test_p_center_suite_body_unshifted():
    mu = Composition.ones(2)
    alg = parabolic_algebra(Y2, mu, 4)
    reports = p_center_checks(alg, shift_data(ShiftMatrix.zero(2), mu), 3, 1)
    assert all_pass(reports)
    ids = {r.id for r in reports}
    assert {"b-vanishing", "b-filtration", "pq-gr", "pq-central", "p-central", "second-proof-offdiagonal", "s-central"} <= ids
    pq = [r for r in reports if r.id == "pq-central"]
    assert {r.params["kind"] for r in pq} == {"P", "Q"}
    assert all(r.scope == "full" for r in pq)


def test_p_center_suite_body_shifted():
    mu = Composition.ones(2)
    alg = parabolic_algebra(Y2, mu, 3)
    data = shift_data(ShiftMatrix.parse("0,1;0,0"), mu)
    reports = p_center_checks(alg, data, 3, 1)
    assert all_pass(reports)
    central = [r for r in reports if r.id == "p-central"]
    assert central and all(r.scope == "shifted" for r in central)
    assert "s-central" not in {r.id for r in reports}


def test_p_center_budget_reaches_first_shifted_power():
    mu = Composition.ones(2)
    zero = shift_data(ShiftMatrix.zero(2), mu)
    shifted = shift_data(ShiftMatrix.parse("0,1;0,0"), mu)
    assert p_center_budget(zero, 3, 4) == 4
    assert p_center_budget(shifted, 3, 4) == 6
    alg = parabolic_algebra(Y2, mu, 6)
    generators = {g.label: g for g in p_center_generators(alg, shifted, p_center_budget(shifted, 3, 4))}
    power = generators["sE[1,2;1,1](2)^p"]
    assert centrality_check("demo", {}, power.element, 2, alg, shifted).status == "pass"
    assert gr_leading_check("demo", {}, power.element, power.expected, power.degree).status == "pass"
