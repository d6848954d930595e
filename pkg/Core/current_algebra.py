# Core/current_algebra.py
"""
The current algebra g = gl_n[t], its shifted subalgebra g_sigma and U(g).

U(g) elements reuse the PBW rewriting core: a letter Generator(r, i, j)
stands for e_{i,j} t^r (r >= 0) and the bracket below is the correction rule.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from Core.errors import DegreeOverflowError, MalformedInputError
from Core.pbw_engine import AlgebraContext, Bracket, Element, Generator, Word, commutator, normalize
from Core.shapes import Composition, ShiftData

CurrentElement = Element


@lru_cache(maxsize=None)
def _current_bracket(x: Generator, y: Generator) -> Bracket:
    # [e_ij t^r, e_kl t^s] = delta_jk e_il t^(r+s) - delta_li e_kj t^(r+s)
    r, i, j = x
    s, k, l = y
    acc: Dict[Word, int] = {}
    if j == k:
        acc[(Generator(r + s, i, l),)] = 1
    if l == i:
        w = (Generator(r + s, k, j),)
        acc[w] = acc.get(w, 0) - 1
    return tuple((w, c) for w, c in acc.items() if c)


@dataclass(frozen=True)
class CurrentAlgebraContext(AlgebraContext):
    """U(gl_n[t]) over F_p."""

    min_superscript = 0
    name = "U"

    def letter_degree(self, g: Generator) -> int:
        return g.r

    def bracket(self, x: Generator, y: Generator) -> Bracket:
        return _current_bracket(x, y)

    def format_letter(self, g: Generator) -> str:
        return f"e{g.i}{g.j}t^{g.r}"

    def basis(self, i: int, j: int, r: int) -> Element:
        return normalize([Generator(r, i, j)], 1, self)


@dataclass(frozen=True)
class CurrentBasisElement:
    """e_{a,b;i,j} t^r in block coordinates for a composition mu."""

    a: int
    b: int
    i: int
    j: int
    r: int

    def __post_init__(self) -> None:
        if self.r < 0:
            raise MalformedInputError(f"power of t must be nonnegative, got {self.r}")

    def letter(self, mu: Composition) -> Generator:
        return Generator(self.r, mu.global_index(self.a, self.i), mu.global_index(self.b, self.j))

    @classmethod
    def from_letter(cls, g: Generator, mu: Composition) -> "CurrentBasisElement":
        a, i = mu.locate(g.i)
        b, j = mu.locate(g.j)
        return cls(a, b, i, j, g.r)

    def in_shifted(self, data: ShiftData) -> bool:
        return self.r >= data.s_mu(self.a, self.b)

    def __str__(self) -> str:
        return f"e_{self.a},{self.b};{self.i},{self.j} t^{self.r}"


def current_context(n: int, p: int) -> CurrentAlgebraContext:
    return CurrentAlgebraContext(n, p)


def basis_element(ctx: CurrentAlgebraContext, x: CurrentBasisElement, mu: Composition) -> Element:
    return normalize([x.letter(mu)], 1, ctx)


def current_bracket(ctx: CurrentAlgebraContext, x: CurrentBasisElement, y: CurrentBasisElement, mu: Composition) -> Element:
    """delta_{b,c} delta_{k,j} e_{a,d;i,l} t^{r+s} - delta_{d,a} delta_{l,i} e_{c,b;k,j} t^{r+s}."""
    result = ctx.zero()
    if x.b == y.a and y.i == x.j:
        result = result + basis_element(ctx, CurrentBasisElement(x.a, y.b, x.i, y.j, x.r + y.r), mu)
    if y.b == x.a and y.j == x.i:
        result = result - basis_element(ctx, CurrentBasisElement(y.a, x.b, y.i, x.j, x.r + y.r), mu)
    return result


def gr_identify(x: Element, d: int, mu: Composition | None = None) -> Element:
    """
    Image of gr_d x under chi: t_{i,j}^{(r+1)} -> e_{i,j} t^r. The PBW order
    is carried over, so ordered monomials stay ordered.
    """
    if x.loop_degree() > d:
        raise DegreeOverflowError(f"element has loop degree {x.loop_degree()} > {d}")
    target = CurrentAlgebraContext(x.ctx.n, x.ctx.p)
    terms = {}
    for m, c in x.gr_component(d).items():
        terms[tuple(Generator(g.r - 1, g.i, g.j) for g in m)] = c
    return Element(target, terms)


def z(ctx: CurrentAlgebraContext, r: int) -> Element:
    """z_r = sum_I e_{I,I} t^r."""
    result = ctx.zero()
    for index in range(1, ctx.n + 1):
        result = result + ctx.basis(index, index, r)
    return result


def restricted_p_map(ctx: CurrentAlgebraContext, letter: Generator) -> Element:
    """(e_{i,j} t^r)^[p] = delta_{i,j} e_{i,j} t^{rp}."""
    if letter.i != letter.j:
        return ctx.zero()
    return ctx.basis(letter.i, letter.i, letter.r * ctx.p)


def shifted_basis(data: ShiftData, budget: int) -> List[Generator]:
    """Letters e_{I,J} t^r of g_sigma with r <= budget."""
    letters = []
    for big_i, big_j in itertools.product(range(1, data.n + 1), repeat=2):
        for r in range(data.sigma.s(big_i, big_j), budget + 1):
            letters.append(Generator(r, big_i, big_j))
    return sorted(letters)


def current_center_generators(data: ShiftData, p: int, budget: int) -> List[Tuple[str, Element]]:
    """z_r for r <= budget and (e t^r)^p - delta delta e t^{rp} for s^mu <= r, rp <= budget."""
    ctx = CurrentAlgebraContext(data.n, p)
    out: List[Tuple[str, Element]] = []
    for r in range(budget + 1):
        out.append((f"z[{r}]", z(ctx, r)))
    for big_i, big_j in itertools.product(range(1, data.n + 1), repeat=2):
        a, i = data.mu.locate(big_i)
        b, j = data.mu.locate(big_j)
        r = data.s_mu(a, b)
        while r * p <= budget:
            letter = Generator(r, big_i, big_j)
            element = ctx.basis(big_i, big_j, r) ** p - restricted_p_map(ctx, letter)
            out.append((f"pgen[{a},{b};{i},{j};{r}]", element))
            r += 1
    return out


def central_in_shifted(x: Element, data: ShiftData, budget: int) -> List[Generator]:
    """Letters of g_sigma (up to budget) that fail to commute with x."""
    ctx = x.ctx
    return [g for g in shifted_basis(data, budget) if not commutator(x, normalize([g], 1, ctx)).is_zero()]


def leading_monomial(x: Element) -> Tuple:
    """Highest (degree, monomial) pair; used for distinctness checks."""
    if x.is_zero():
        raise MalformedInputError("zero has no leading monomial")
    return max((x.monomial_degree(m), len(m), m) for m, _ in x.items())
