# Tests/test_modular.py
import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import binomial

from Core.errors import MalformedInputError
from Utils.modular import binomial_mod_p, inverse_mod, require_odd_prime


def test_binomials_by_digits():
    assert binomial_mod_p(5, 2, 3) == 1
    assert binomial_mod_p(3, 1, 3) == 0
    assert binomial_mod_p(4, 7, 5) == 0


@given(st.integers(0, 60), st.integers(0, 60), st.sampled_from([3, 5, 7]))
def test_binomials_agree_with_sympy(m, k, p):
    assert binomial_mod_p(m, k, p) == int(binomial(m, k)) % p


def test_inverses():
    assert inverse_mod(2, 5) == 3
    assert inverse_mod(-1, 7) == 6
    with pytest.raises(ZeroDivisionError):
        inverse_mod(10, 5)


@pytest.mark.parametrize("p", [2, 4, 9, 1, -3])
def test_rejects_non_odd_primes(p):
    with pytest.raises(MalformedInputError):
        require_odd_prime(p)
