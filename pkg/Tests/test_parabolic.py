# Tests/test_parabolic.py
import pytest

from Core.errors import MalformedInputError
from Core.parabolic import (
    ParabolicIndex,
    higher_root,
    parabolic_algebra,
    pbw_index_sets,
    shifted_generator_set,
)
from Core.pbw_engine import AlgebraContext
from Core.shapes import Composition, ShiftMatrix, shift_data

Y2 = AlgebraContext(2, 3)
Y3 = AlgebraContext(3, 3)
SIGMA = ShiftMatrix.parse("0,1;0,0")


def test_low_coefficients_for_ones():
    alg = parabolic_algebra(Y2, Composition.ones(2), 3)
    assert alg.E(1, 1, 1, 1) == Y2.gen(1, 2, 1)
    assert alg.F(1, 1, 1, 1) == Y2.gen(2, 1, 1)
    assert alg.D(1, 1, 1, 2) == Y2.gen(1, 1, 2)
    assert alg.D(2, 1, 1, 1) == Y2.gen(2, 2, 1)
    # E(u) = t11(u)^{-1} t12(u)
    assert alg.E(1, 1, 1, 2) == Y2.gen(1, 2, 2) - Y2.gen(1, 1, 1) * Y2.gen(1, 2, 1)
    assert alg.Dp(1, 1, 1, 1) == -Y2.gen(1, 1, 1)


def test_coefficient_by_index():
    alg = parabolic_algebra(Y2, Composition.ones(2), 2)
    idx = ParabolicIndex("E", 1, 2, 1, 1, 1)
    assert idx.label() == "E[1,2;1,1](1)"
    assert alg.coefficient(idx) == Y2.gen(1, 2, 1)
    assert alg.evaluate(idx.with_r(2)) == alg.E(1, 1, 1, 2)


def test_index_validation():
    with pytest.raises(MalformedInputError):
        ParabolicIndex("E", 2, 1, 1, 1, 1)
    with pytest.raises(MalformedInputError):
        ParabolicIndex("D", 1, 2, 1, 1, 1)
    with pytest.raises(MalformedInputError):
        ParabolicIndex("G", 1, 1, 1, 1, 1)
    with pytest.raises(MalformedInputError):
        ParabolicIndex("D", 1, 1, 2, 1, 1).check(Composition.ones(2))


def test_higher_root_matches_gauss_entry():
    mu = Composition.ones(3)
    alg = parabolic_algebra(Y3, mu, 3)
    assert higher_root(alg, "E", 1, 3, 1, 1, 1) == Y3.gen(1, 3, 1)
    assert higher_root(alg, "E", 1, 3, 1, 1, 2) == alg.series("E", 1, 3, 1, 1).coeff(2)
    assert higher_root(alg, "F", 1, 3, 1, 1, 2) == alg.series("F", 3, 1, 1, 1).coeff(2)


def test_higher_root_respects_shift_bound():
    alg = parabolic_algebra(Y2, Composition.ones(2), 3)
    data = shift_data(SIGMA, Composition.ones(2))
    with pytest.raises(MalformedInputError):
        higher_root(alg, "E", 1, 2, 1, 1, 1, data=data)
    assert higher_root(alg, "E", 1, 2, 1, 1, 2, data=data) == alg.E(1, 1, 1, 2)
    assert higher_root(alg, "F", 1, 2, 1, 1, 1, data=data) == Y2.gen(2, 1, 1)


def test_shifted_generating_set():
    data = shift_data(SIGMA, Composition.ones(2))
    found = shifted_generator_set(data, 2)
    assert len(found) == 7
    assert ParabolicIndex("E", 1, 2, 1, 1, 1) not in found
    assert ParabolicIndex("E", 1, 2, 1, 1, 2) in found
    assert ParabolicIndex("F", 2, 1, 1, 1, 1) in found


def test_pbw_index_sets_split_by_family():
    data = shift_data(ShiftMatrix.zero(3), Composition.ones(3))
    sets = pbw_index_sets(data, 1)
    assert len(sets["I"]) == 3
    assert len(sets["J"]) == 3 and len(sets["K"]) == 3
    assert all(idx.shifted for idx in sets["J"])
