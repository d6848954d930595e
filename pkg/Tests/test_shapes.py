# Tests/test_shapes.py
import pytest

from Core.errors import AdmissibilityError, MalformedInputError, ShiftMatrixError
from Core.shapes import Composition, ShiftMatrix, compositions, parse_sigma, shift_data


def test_composition_offsets_and_blocks():
    mu = Composition.parse("1,2")
    assert mu.n == 3 and mu.m == 2
    assert mu.offset(1) == 0 and mu.offset(2) == 1 and mu.offset(3) == 3
    assert list(mu.block_range(2)) == [2, 3]
    assert mu.global_index(2, 2) == 3
    assert mu.locate(3) == (2, 2)
    assert mu.tail(2) == Composition((2,))
    assert mu.refine(2, 1) == Composition.ones(3)


def test_composition_rejects_bad_input():
    with pytest.raises(MalformedInputError):
        Composition.parse("1,x")
    with pytest.raises(MalformedInputError):
        Composition((0, 2))
    with pytest.raises(MalformedInputError):
        Composition.parse("2").refine(1, 2)


def test_compositions_enumerates_all():
    found = [c.parts for c in compositions(3)]
    assert found[0] == (3,)
    assert sorted(found) == [(1, 1, 1), (1, 2), (2, 1), (3,)]


def test_shift_matrix_parse():
    assert ShiftMatrix.parse("zero", 2) == ShiftMatrix.zero(2)
    sigma = ShiftMatrix.parse("0,1;0,0")
    assert sigma.s(1, 2) == 1 and not sigma.is_zero()
    assert parse_sigma([[0, 1], [0, 0]], 2) == sigma
    with pytest.raises(MalformedInputError):
        ShiftMatrix.parse("zero")


def test_shift_matrix_names_failing_triple():
    with pytest.raises(ShiftMatrixError) as info:
        ShiftMatrix(((0, 1, 0), (0, 0, 0), (0, 0, 0)))
    assert info.value.triple == (1, 2, 3)


def test_shift_matrix_rejects_nonzero_diagonal():
    with pytest.raises(ShiftMatrixError):
        ShiftMatrix(((1, 0), (0, 0)))


def test_admissibility_and_block_shifts():
    sigma = ShiftMatrix.parse("0,1;0,0")
    data = shift_data(sigma, Composition.ones(2))
    assert data.s_mu(1, 2) == 1
    assert data.s_mu(2, 1) == 0
    with pytest.raises(AdmissibilityError) as info:
        shift_data(sigma, Composition((2,)))
    assert (info.value.i, info.value.j) == (1, 2)


def test_size_mismatch_between_sigma_and_mu():
    with pytest.raises(MalformedInputError):
        shift_data(ShiftMatrix.zero(2), Composition.ones(3))
