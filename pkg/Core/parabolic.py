# Core/parabolic.py
"""
Parabolic generators D, D', E, F of Y_n for a composition mu, the higher
root elements and their shifted versions, and the generating sets of the
shifted Yangian Y_n(sigma).
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from Core.errors import MalformedInputError
from Core.gauss import GaussFactors, gauss_decompose
from Core.pbw_engine import AlgebraContext, Element, commutator
from Core.series_ring import SeriesMatrix, TruncatedSeries
from Core.shapes import Composition, ShiftData, ShiftMatrix

logger = logging.getLogger(__name__)

FAMILIES = ("D", "D'", "E", "F")


@dataclass(frozen=True, order=True)
class ParabolicIndex:
    """
    One generator X^{(r)}_{a,b;i,j}. ``a`` and ``b`` are the row and column
    blocks, so D has a == b, E has a < b and F has a > b. ``shifted`` marks
    the sigma-versions of higher roots.
    """

    family: str
    a: int
    b: int
    i: int
    j: int
    r: int
    shifted: bool = False

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise MalformedInputError(f"unknown parabolic family {self.family!r}")
        if self.r < 0:
            raise MalformedInputError(f"superscript must be nonnegative, got {self.r}")
        if self.family in ("D", "D'") and self.a != self.b:
            raise MalformedInputError(f"{self.family} lives on the diagonal, got blocks ({self.a}, {self.b})")
        if self.family == "E" and not self.a < self.b:
            raise MalformedInputError(f"E needs row block < column block, got ({self.a}, {self.b})")
        if self.family == "F" and not self.a > self.b:
            raise MalformedInputError(f"F needs row block > column block, got ({self.a}, {self.b})")

    def check(self, mu: Composition) -> None:
        if not (1 <= self.i <= mu.size(self.a) and 1 <= self.j <= mu.size(self.b)):
            raise MalformedInputError(f"{self.label()} has inner indices out of range for {mu}")

    def with_r(self, r: int) -> "ParabolicIndex":
        return ParabolicIndex(self.family, self.a, self.b, self.i, self.j, r, self.shifted)

    def shift_bound(self, data: ShiftData) -> int:
        """Superscripts must exceed this for the generator to lie in Y_n(sigma)."""
        if self.family in ("D", "D'"):
            return 0
        return data.s_mu(self.a, self.b)

    def label(self) -> str:
        prefix = "s" if self.shifted else ""
        if self.family in ("D", "D'"):
            return f"{self.family}[{self.a};{self.i},{self.j}]({self.r})"
        return f"{prefix}{self.family}[{self.a},{self.b};{self.i},{self.j}]({self.r})"

    def __str__(self) -> str:
        return self.label()


class ParabolicAlgebra:
    """Gauss factors of T(u) for one composition, with coefficient access."""

    def __init__(self, ctx: AlgebraContext, mu: Composition, order: int) -> None:
        if mu.n != ctx.n:
            raise MalformedInputError(f"composition {mu} does not match n={ctx.n}")
        self.ctx = ctx
        self.mu = mu
        self.order = order
        self._factors: GaussFactors | None = None

    @property
    def factors(self) -> GaussFactors:
        if self._factors is None:
            logger.debug("decomposing T(u) for n=%s mu=%s to order %s", self.ctx.n, self.mu, self.order)
            self._factors = gauss_decompose(SeriesMatrix.rtt(self.ctx, self.order), self.mu)
        return self._factors

    # series
    def block(self, family: str, a: int, b: int) -> SeriesMatrix:
        if family == "D":
            return self.factors.d(a)
        if family == "D'":
            return self.factors.d_prime(a)
        if family == "E":
            return self.factors.e(a, b)
        if family == "F":
            return self.factors.f(a, b)
        raise MalformedInputError(f"unknown parabolic family {family!r}")

    def series(self, family: str, a: int, b: int, i: int, j: int) -> TruncatedSeries:
        return self.block(family, a, b).at(i, j)

    def D_series(self, a: int, i: int, j: int) -> TruncatedSeries:
        return self.series("D", a, a, i, j)

    def Dp_series(self, a: int, i: int, j: int) -> TruncatedSeries:
        return self.series("D'", a, a, i, j)

    def E_series(self, a: int, i: int, j: int) -> TruncatedSeries:
        """E_{a;i,j}(u) = E_{a,a+1;i,j}(u)."""
        return self.series("E", a, a + 1, i, j)

    def F_series(self, a: int, i: int, j: int) -> TruncatedSeries:
        """F_{a;i,j}(u) = F_{a+1,a;i,j}(u)."""
        return self.series("F", a + 1, a, i, j)

    # coefficients
    def coefficient(self, idx: ParabolicIndex) -> Element:
        idx.check(self.mu)
        if idx.shifted:
            raise MalformedInputError(f"{idx.label()} is a shifted root; use evaluate with shift data")
        return self.series(idx.family, idx.a, idx.b, idx.i, idx.j).coeff(idx.r)

    def D(self, a: int, i: int, j: int, r: int) -> Element:
        return self.D_series(a, i, j).coeff(r)

    def Dp(self, a: int, i: int, j: int, r: int) -> Element:
        return self.Dp_series(a, i, j).coeff(r)

    def E(self, a: int, i: int, j: int, r: int) -> Element:
        return self.E_series(a, i, j).coeff(r)

    def F(self, a: int, i: int, j: int, r: int) -> Element:
        return self.F_series(a, i, j).coeff(r)

    def evaluate(self, idx: ParabolicIndex, data: ShiftData | None = None) -> Element:
        """Plain coefficient, or the shifted higher root when ``idx.shifted``."""
        if not idx.shifted or abs(idx.a - idx.b) == 1:
            return self.coefficient(ParabolicIndex(idx.family, idx.a, idx.b, idx.i, idx.j, idx.r))
        if data is None:
            raise MalformedInputError(f"{idx.label()} needs shift data")
        if idx.family == "E":
            return higher_root(self, "E", idx.a, idx.b, idx.i, idx.j, idx.r, 1, data)
        return higher_root(self, "F", idx.b, idx.a, idx.i, idx.j, idx.r, 1, data)

    def __repr__(self) -> str:
        return f"ParabolicAlgebra(n={self.ctx.n}, p={self.ctx.p}, mu={self.mu}, order={self.order})"


@lru_cache(maxsize=64)
def parabolic_algebra(ctx: AlgebraContext, mu: Composition, order: int) -> ParabolicAlgebra:
    return ParabolicAlgebra(ctx, mu, order)


def parabolic_coefficient(idx: ParabolicIndex, ctx: AlgebraContext, mu: Composition, order: int) -> Element:
    return parabolic_algebra(ctx, mu, order).coefficient(idx)


def block_pairs(mu: Composition, a: int, b: int) -> List[Tuple[int, int]]:
    """Inner index pairs (i, j) with i <= mu_a and j <= mu_b."""
    return list(itertools.product(range(1, mu.size(a) + 1), range(1, mu.size(b) + 1)))


def _zero_shift(mu: Composition) -> ShiftData:
    return ShiftData(ShiftMatrix.zero(mu.n), mu)


@lru_cache(maxsize=None)
def _higher_root(alg: ParabolicAlgebra, side: str, a: int, b: int, i: int, j: int, r: int, k: int, data: ShiftData) -> Element:
    if b == a + 1:
        if side == "E":
            return alg.E(a, i, j, r)
        return alg.F(a, i, j, r)
    if side == "E":
        # sE_{a,b;i,j}^(r) = [sE_{a,b-1;i,k}^(r - s), E_{b-1;k,j}^(s + 1)], s = s^mu_{b-1,b}
        step = data.s_mu(b - 1, b)
        inner = _higher_root(alg, "E", a, b - 1, i, k, r - step, 1, data)
        return commutator(inner, alg.E(b - 1, k, j, step + 1))
    # sF_{b,a;i,j}^(r) = [F_{b-1;i,k}^(s + 1), sF_{b-1,a;k,j}^(r - s)], s = s^mu_{b,b-1}
    step = data.s_mu(b, b - 1)
    inner = _higher_root(alg, "F", a, b - 1, k, j, r - step, 1, data)
    return commutator(alg.F(b - 1, i, k, step + 1), inner)


def higher_root(
    alg: ParabolicAlgebra,
    side: str,
    a: int,
    b: int,
    i: int,
    j: int,
    r: int,
    k: int = 1,
    data: ShiftData | None = None,
) -> Element:
    """
    E-side: E^{(r)}_{a,b;i,j} with i <= mu_a, j <= mu_b. F-side:
    F^{(r)}_{b,a;i,j} with i <= mu_b, j <= mu_a. ``k`` is the witness index
    in block b-1 used at the top level. Without shift data the recursion is
    the unshifted one.
    """
    mu = alg.mu
    if side not in ("E", "F"):
        raise MalformedInputError(f"side must be E or F, got {side!r}")
    if not 1 <= a < b <= mu.m:
        raise MalformedInputError(f"higher root needs 1 <= a < b <= {mu.m}, got ({a}, {b})")
    rows, cols = (mu.size(a), mu.size(b)) if side == "E" else (mu.size(b), mu.size(a))
    if not (1 <= i <= rows and 1 <= j <= cols):
        raise MalformedInputError(f"inner indices ({i}, {j}) out of range for blocks ({a}, {b}) of {mu}")
    if b > a + 1 and not 1 <= k <= mu.size(b - 1):
        raise MalformedInputError(f"witness {k} out of range for block {b - 1} of {mu}")
    data = data if data is not None else _zero_shift(mu)
    bound = data.s_mu(a, b) if side == "E" else data.s_mu(b, a)
    if r <= bound:
        raise MalformedInputError(f"superscript {r} not above the shift bound {bound} for {side}[{a},{b}]")
    return _higher_root(alg, side, a, b, i, j, r, k, data)


def clear_root_cache() -> None:
    _higher_root.cache_clear()


def shifted_generator_set(data: ShiftData, budget: int) -> List[ParabolicIndex]:
    """D^(r) for 0 < r <= budget and E_a, F_a above their shift bounds."""
    mu = data.mu
    out: List[ParabolicIndex] = []
    for a in range(1, mu.m + 1):
        for i, j in itertools.product(range(1, mu.size(a) + 1), repeat=2):
            out.extend(ParabolicIndex("D", a, a, i, j, r) for r in range(1, budget + 1))
    for a in range(1, mu.m):
        for i, j in itertools.product(range(1, mu.size(a) + 1), range(1, mu.size(a + 1) + 1)):
            out.extend(ParabolicIndex("E", a, a + 1, i, j, r) for r in range(data.s_mu(a, a + 1) + 1, budget + 1))
        for i, j in itertools.product(range(1, mu.size(a + 1) + 1), range(1, mu.size(a) + 1)):
            out.extend(ParabolicIndex("F", a + 1, a, i, j, r) for r in range(data.s_mu(a + 1, a) + 1, budget + 1))
    return out


def pbw_index_sets(data: ShiftData, budget: int) -> Dict[str, List[ParabolicIndex]]:
    """The sets I, J, K of the shifted PBW theorem, cut at superscript budget."""
    mu = data.mu
    sets: Dict[str, List[ParabolicIndex]] = {"I": [], "J": [], "K": []}
    for a in range(1, mu.m + 1):
        for i, j in itertools.product(range(1, mu.size(a) + 1), repeat=2):
            sets["I"].extend(ParabolicIndex("D", a, a, i, j, r) for r in range(1, budget + 1))
    for a, b in itertools.combinations(range(1, mu.m + 1), 2):
        for i, j in itertools.product(range(1, mu.size(a) + 1), range(1, mu.size(b) + 1)):
            sets["J"].extend(ParabolicIndex("E", a, b, i, j, r, True) for r in range(data.s_mu(a, b) + 1, budget + 1))
        for i, j in itertools.product(range(1, mu.size(b) + 1), range(1, mu.size(a) + 1)):
            sets["K"].extend(ParabolicIndex("F", b, a, i, j, r, True) for r in range(data.s_mu(b, a) + 1, budget + 1))
    return sets
