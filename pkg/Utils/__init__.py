# Utils/__init__.py
from .modular import binomial_mod_p, inverse_mod, require_odd_prime

__all__ = [
    "binomial_mod_p",
    "inverse_mod",
    "require_odd_prime",
]
