# Utils/modular.py
from __future__ import annotations

from functools import lru_cache
from typing import Tuple

from sympy import isprime

from Core.errors import MalformedInputError


def require_odd_prime(p: int) -> int:
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise MalformedInputError(f"characteristic must be an odd prime, got {p!r}")
    return p


@lru_cache(maxsize=None)
def _factorial_table(p: int) -> Tuple[int, ...]:
    table = [1] * p
    for k in range(1, p):
        table[k] = table[k - 1] * k % p
    return tuple(table)


def _small_binomial(m: int, k: int, p: int) -> int:
    if k < 0 or k > m:
        return 0
    fact = _factorial_table(p)
    return fact[m] * pow(fact[k] * fact[m - k], p - 2, p) % p


def binomial_mod_p(m: int, k: int, p: int) -> int:
    """binomial(m, k) mod p by Lucas' theorem (digits of m and k in base p)."""
    if k < 0 or m < 0 or k > m:
        return 0
    result = 1
    while k:
        m, m_digit = divmod(m, p)
        k, k_digit = divmod(k, p)
        if k_digit > m_digit:
            return 0
        result = result * _small_binomial(m_digit, k_digit, p) % p
    return result


def inverse_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)
