# Tests/test_current_algebra.py
import pytest

from Core.current_algebra import (
    CurrentBasisElement,
    central_in_shifted,
    current_bracket,
    current_center_generators,
    current_context,
    gr_identify,
    leading_monomial,
    restricted_p_map,
    shifted_basis,
    z,
)
from Core.errors import DegreeOverflowError, MalformedInputError
from Core.pbw_engine import AlgebraContext, Generator, commutator
from Core.shapes import Composition, ShiftMatrix, shift_data

U2 = current_context(2, 3)
MU = Composition.ones(2)


def test_block_bracket_matches_letter_bracket():
    x = CurrentBasisElement(1, 2, 1, 1, 1)
    y = CurrentBasisElement(2, 1, 1, 1, 2)
    expected = U2.basis(1, 1, 3) - U2.basis(2, 2, 3)
    assert current_bracket(U2, x, y, MU) == expected
    assert commutator(U2.basis(1, 2, 1), U2.basis(2, 1, 2)) == expected


def test_degree_zero_letters_are_genuine():
    assert not U2.basis(1, 2, 0).is_zero()
    assert U2.basis(1, 1, 0).loop_degree() == 0
    assert U2 != AlgebraContext(2, 3)


def test_block_coordinates_round_trip():
    mu = Composition((1, 2))
    x = CurrentBasisElement.from_letter(Generator(2, 3, 1), mu)
    assert (x.a, x.b, x.i, x.j, x.r) == (2, 1, 2, 1, 2)
    assert x.letter(mu) == Generator(2, 3, 1)


def test_gr_identification():
    y2 = AlgebraContext(2, 3)
    assert gr_identify(y2.gen(1, 2, 2), 1) == U2.basis(1, 2, 1)
    x = y2.gen(2, 1, 1) * y2.gen(1, 2, 1)
    # t21 t12 = t12 t21 - t11 + t22, all in degree 0
    expected = U2.basis(1, 2, 0) * U2.basis(2, 1, 0) - U2.basis(1, 1, 0) + U2.basis(2, 2, 0)
    assert gr_identify(x, 0) == expected
    assert gr_identify(y2.gen(1, 2, 2) * y2.gen(2, 1, 1), 1) == U2.basis(1, 2, 1) * U2.basis(2, 1, 0)
    with pytest.raises(DegreeOverflowError):
        gr_identify(y2.gen(1, 2, 3), 1)


def test_z_is_central():
    for letter in [U2.basis(1, 2, 1), U2.basis(2, 1, 0), U2.basis(1, 1, 2)]:
        assert commutator(z(U2, 2), letter).is_zero()


def test_restricted_map():
    assert restricted_p_map(U2, Generator(1, 1, 2)).is_zero()
    assert restricted_p_map(U2, Generator(1, 2, 2)) == U2.basis(2, 2, 3)


def test_center_generators_commute_with_shifted_basis():
    data = shift_data(ShiftMatrix.zero(2), MU)
    generators = current_center_generators(data, 3, 3)
    labels = [label for label, _ in generators]
    assert labels[:4] == ["z[0]", "z[1]", "z[2]", "z[3]"]
    assert "pgen[1,2;1,1;1]" in labels
    for _, element in generators:
        assert central_in_shifted(element, data, 2) == []


def test_shifted_basis_respects_sigma():
    data = shift_data(ShiftMatrix.parse("0,1;0,0"), MU)
    letters = shifted_basis(data, 1)
    assert len(letters) == 7
    assert Generator(0, 1, 2) not in letters
    generators = dict(current_center_generators(data, 3, 3))
    assert "pgen[1,2;1,1;0]" not in generators
    assert "pgen[2,1;1,1;0]" in generators


def test_noncentral_element_is_reported():
    data = shift_data(ShiftMatrix.zero(2), MU)
    assert central_in_shifted(U2.basis(1, 2, 0), data, 0)


def test_leading_monomial():
    x = U2.basis(1, 2, 2) + U2.basis(1, 1, 0) * U2.basis(2, 2, 0)
    assert leading_monomial(x)[0] == 2
    with pytest.raises(MalformedInputError):
        leading_monomial(U2.zero())
