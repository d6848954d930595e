# Tests/test_gauss.py
import pytest

from Core.errors import MalformedInputError, SingularSeriesError
from Core.gauss import gauss_decompose, quasideterminant, split_block_check
from Core.pbw_engine import AlgebraContext
from Core.series_ring import SeriesMatrix
from Core.shapes import Composition, compositions

Y2 = AlgebraContext(2, 3)
Y3 = AlgebraContext(3, 3)


@pytest.mark.parametrize("mu", list(compositions(3)), ids=str)
def test_factors_reassemble_to_t(mu):
    T = SeriesMatrix.rtt(Y3, 2)
    assert gauss_decompose(T, mu).reassemble() == T


def test_two_by_two_factors_by_hand():
    T = SeriesMatrix.rtt(Y2, 2)
    factors = gauss_decompose(T, Composition.ones(2))
    assert factors.d(1) == T.submatrix([1], [1])
    assert factors.e(1, 2).at(1, 1).coeff(1) == Y2.gen(1, 2, 1)
    assert factors.f(2, 1).at(1, 1).coeff(1) == Y2.gen(2, 1, 1)
    assert factors.d(2).at(1, 1).coeff(1) == Y2.gen(2, 2, 1)
    assert factors.d_prime(1) @ factors.d(1) == SeriesMatrix.identity(Y2, 1, 2)


@pytest.mark.parametrize("mu", [Composition.ones(3), Composition((1, 2)), Composition((2, 1))], ids=str)
def test_quasideterminants_agree_with_gauss(mu):
    T = SeriesMatrix.rtt(Y3, 2)
    factors = gauss_decompose(T, mu)
    for a in range(1, mu.m + 1):
        assert quasideterminant(T, mu, a) == factors.d(a)
        for b in range(a + 1, mu.m + 1):
            assert quasideterminant(T, mu, a, "E", b) == factors.e(a, b)
            assert quasideterminant(T, mu, a, "F", b) == factors.f(b, a)


def test_split_block_relations_hold():
    T = SeriesMatrix.rtt(Y3, 2)
    results = split_block_check(T, Composition((1, 2)), 2, 1)
    assert results and all(results.values())
    results = split_block_check(T, Composition((2, 1)), 1, 1)
    assert all(results.values())


def test_bad_inputs():
    T = SeriesMatrix.rtt(Y2, 2)
    with pytest.raises(MalformedInputError):
        gauss_decompose(T, Composition.ones(3))
    with pytest.raises(MalformedInputError):
        quasideterminant(T, Composition.ones(2), 1, "E")
    with pytest.raises(SingularSeriesError):
        gauss_decompose(T - T, Composition.ones(2))
