# Tests/test_pbw_engine.py
import random

import pytest
from hypothesis import given, settings, strategies as st

from Core.errors import ContextMismatchError, MalformedInputError, MissingImageError
from Core.pbw_engine import (
    AlgebraContext,
    Generator,
    apply_generator_map,
    commutator,
    expand_naive,
    normalize,
    pbw_span_rank,
    random_element,
    t,
)

Y2 = AlgebraContext(2, 3)


def test_bad_prime_and_letters_are_rejected():
    with pytest.raises(MalformedInputError):
        AlgebraContext(2, 4)
    with pytest.raises(MalformedInputError):
        AlgebraContext(2, 2)
    with pytest.raises(MalformedInputError):
        Y2.gen(3, 1, 1)


def test_rtt_bracket_in_degree_one():
    assert commutator(Y2.gen(1, 2, 1), Y2.gen(2, 1, 1)) == Y2.gen(1, 1, 1) - Y2.gen(2, 2, 1)
    assert commutator(Y2.gen(1, 2, 2), Y2.gen(2, 1, 1)) == Y2.gen(1, 1, 2) - Y2.gen(2, 2, 2)


def test_normal_form_straightens_out_of_order_pair():
    x = Y2.gen(2, 1, 1) * Y2.gen(1, 2, 1)
    assert x.coeff([t(1, 2, 1), t(2, 1, 1)]) == 1
    assert x.coeff([t(1, 1, 1)]) == Y2.p - 1
    assert x.coeff([t(2, 2, 1)]) == 1
    assert len(x) == 3


def test_y1_is_commutative():
    y1 = AlgebraContext(1, 5)
    assert commutator(y1.gen(1, 1, 1), y1.gen(1, 1, 3)).is_zero()
    assert y1.gen(1, 1, 2) * y1.gen(1, 1, 1) == y1.gen(1, 1, 1) * y1.gen(1, 1, 2)


def test_scalars_reduce_mod_p():
    assert (Y2.gen(1, 2, 1) * 3).is_zero()
    assert Y2.gen(1, 1, 1) * 4 == Y2.gen(1, 1, 1)
    assert Y2.scalar(6) == 0


def test_degree_zero_generators_fold_to_delta():
    assert Y2.gen(1, 1, 0) == Y2.unit()
    assert Y2.gen(1, 2, 0).is_zero()


def test_loop_degree():
    assert Y2.zero().loop_degree() == -1
    assert Y2.unit().loop_degree() == 0
    assert (Y2.gen(1, 2, 3) * Y2.gen(2, 1, 2)).loop_degree() == 3


def test_serialize_is_sorted_triples():
    x = Y2.gen(2, 1, 1) + Y2.gen(1, 2, 1) * 2
    assert x.serialize() == [[[[1, 2, 1]], 2], [[[2, 1, 1]], 1]]


def test_context_mismatch():
    with pytest.raises(ContextMismatchError):
        Y2.gen(1, 1, 1) * AlgebraContext(2, 5).gen(1, 1, 1)


def test_naive_expander_agrees_with_cached_core():
    word = [Generator(2, 2, 1), Generator(1, 1, 2), Generator(1, 2, 2), Generator(1, 2, 1)]
    assert expand_naive(Y2, word) == normalize(word, 1, Y2)


def test_antihomomorphic_generator_map():
    # transposition t_ij -> t_ji reverses products
    images = {t(1, 2, 1): Y2.gen(2, 1, 1), t(2, 1, 1): Y2.gen(1, 2, 1)}
    x = Y2.gen(1, 2, 1) * Y2.gen(2, 1, 1)
    assert apply_generator_map(x, images, antihomomorphism=True) == x
    assert apply_generator_map(x, images) == Y2.gen(2, 1, 1) * Y2.gen(1, 2, 1)


def test_generator_map_reports_missing_letters():
    with pytest.raises(MissingImageError):
        apply_generator_map(Y2.gen(1, 2, 2), {}, target=Y2)


def test_pbw_rank_matches_commutative_count():
    rank, expected = pbw_span_rank(Y2, 2, 2)
    assert rank == expected


def _element(seed: int, n: int = 2, p: int = 3):
    return random_element(AlgebraContext(n, p), random.Random(seed), max_weight=4)


@settings(max_examples=25, deadline=None, derandomize=True)
@given(st.integers(0, 10_000), st.integers(0, 10_000), st.integers(0, 10_000))
def test_associativity(a, b, c):
    x, y, z = _element(a), _element(b), _element(c)
    assert (x * y) * z == x * (y * z)


@settings(max_examples=25, deadline=None, derandomize=True)
@given(st.integers(0, 10_000), st.integers(0, 10_000))
def test_antisymmetry(a, b):
    x, y = _element(a, 3, 5), _element(b, 3, 5)
    assert commutator(x, y) == -commutator(y, x)


@settings(max_examples=15, deadline=None, derandomize=True)
@given(st.integers(0, 10_000), st.integers(0, 10_000), st.integers(0, 10_000))
def test_jacobi(a, b, c):
    x, y, z = _element(a), _element(b), _element(c)
    total = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))
    assert total.is_zero()
