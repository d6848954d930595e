# Core/pbw_engine.py
"""
Exact arithmetic in the Yangian Y_n over F_p.

Elements are finite linear combinations of PBW monomials in the RTT
generators t_{i,j}^{(r)}. A monomial is a tuple of ``Generator`` letters,
sorted in the fixed order (r, i, j). Products are brought to normal form by
straightening adjacent out-of-order pairs with the bracket supplied by the
algebra context; the same core serves U(gl_n[t]) through
``Core.current_algebra.CurrentAlgebraContext``.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, NamedTuple, Sequence, Tuple

from sympy import GF
from sympy.polys.matrices import DomainMatrix

from Core.errors import ContextMismatchError, MalformedInputError, MissingImageError
from Utils.modular import require_odd_prime

logger = logging.getLogger(__name__)


class Generator(NamedTuple):
    """One letter t_{i,j}^{(r)}; tuple order is the PBW order."""

    r: int
    i: int
    j: int

    def __str__(self) -> str:
        return f"t{self.i}{self.j}^({self.r})"


Monomial = Tuple[Generator, ...]
Word = Tuple[Generator, ...]
Bracket = Tuple[Tuple[Word, int], ...]


def t(i: int, j: int, r: int) -> Generator:
    return Generator(r, i, j)


@lru_cache(maxsize=None)
def _rtt_bracket(x: Generator, y: Generator) -> Bracket:
    # [t_ij^(r), t_kl^(s)] = sum_{t<min(r,s)} t_kj^(t) t_il^(r+s-1-t) - t_kj^(r+s-1-t) t_il^(t)
    r, i, j = x
    s, k, l = y
    top = r + s - 1
    acc: Dict[Word, int] = {}
    if k == j:
        acc[(Generator(top, i, l),)] = acc.get((Generator(top, i, l),), 0) + 1
    if i == l:
        acc[(Generator(top, k, j),)] = acc.get((Generator(top, k, j),), 0) - 1
    for step in range(1, min(r, s)):
        plus = (Generator(step, k, j), Generator(top - step, i, l))
        minus = (Generator(top - step, k, j), Generator(step, i, l))
        acc[plus] = acc.get(plus, 0) + 1
        acc[minus] = acc.get(minus, 0) - 1
    return tuple((w, c) for w, c in acc.items() if c)


@dataclass(frozen=True)
class AlgebraContext:
    """The Yangian Y_n over F_p."""

    n: int
    p: int

    min_superscript = 1
    name = "Y"

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise MalformedInputError(f"matrix size must be a positive integer, got {self.n!r}")
        require_odd_prime(self.p)

    def check_letter(self, g: Generator) -> None:
        if not (1 <= g.i <= self.n and 1 <= g.j <= self.n):
            raise MalformedInputError(f"index ({g.i}, {g.j}) out of range for n={self.n}")
        if g.r < self.min_superscript:
            raise MalformedInputError(f"superscript {g.r} below {self.min_superscript}")

    def letter_degree(self, g: Generator) -> int:
        return g.r - 1

    def bracket(self, x: Generator, y: Generator) -> Bracket:
        return _rtt_bracket(x, y)

    def format_letter(self, g: Generator) -> str:
        return str(g)

    # constructors
    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, c: int) -> "Element":
        return Element(self, {(): c})

    def unit(self) -> "Element":
        return self.scalar(1)

    def gen(self, i: int, j: int, r: int) -> "Element":
        """t_{i,j}^{(r)} with t^{(0)} = delta_{i,j}."""
        return normalize([Generator(r, i, j)], 1, self)


class Element:
    """Immutable F_p-linear combination of PBW monomials."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: AlgebraContext, terms: Mapping[Monomial, int]) -> None:
        p = ctx.p
        self.ctx = ctx
        self._terms: Dict[Monomial, int] = {m: c % p for m, c in terms.items() if c % p}
        self._hash: int | None = None

    # --- inspection ---
    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms.items())

    def monomials(self) -> List[Monomial]:
        return sorted(self._terms)

    def coeff(self, monomial: Sequence[Generator]) -> int:
        return self._terms.get(tuple(monomial), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(not m for m in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def monomial_degree(self, monomial: Monomial) -> int:
        return sum(self.ctx.letter_degree(g) for g in monomial)

    def loop_degree(self) -> int:
        """Largest degree of a monomial, -1 for zero."""
        return max((self.monomial_degree(m) for m in self._terms), default=-1)

    def gr_component(self, d: int) -> "Element":
        return Element(self.ctx, {m: c for m, c in self._terms.items() if self.monomial_degree(m) == d})

    def serialize(self) -> List[List]:
        """Terms as sorted [[[i, j, r], ...], coeff] pairs."""
        out = []
        for m in sorted(self._terms):
            out.append([[[g.i, g.j, g.r] for g in m], self._terms[m]])
        return out

    # --- arithmetic ---
    def _coerce(self, other: object) -> "Element | None":
        if isinstance(other, Element):
            if other.ctx != self.ctx:
                raise ContextMismatchError(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, int):
            return self.ctx.scalar(other)
        return None

    def __add__(self, other: object) -> "Element":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in o._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Element(self.ctx, acc)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.ctx, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "Element":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "Element":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "Element":
        if isinstance(other, int):
            return Element(self.ctx, {m: c * other for m, c in self._terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return multiply(self, o)

    def __rmul__(self, other: object) -> "Element":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "Element":
        return power(self, k)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self.ctx.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms):
            word = " ".join(self.ctx.format_letter(g) for g in m) or "1"
            c = self._terms[m]
            parts.append(word if c == 1 else f"{c}*{word}")
        return " + ".join(parts)


# --- straightening core ---

@lru_cache(maxsize=None)
def _right_multiply(ctx: AlgebraContext, monomial: Monomial, letter: Generator) -> Tuple[Tuple[Monomial, int], ...]:
    if not monomial or monomial[-1] <= letter:
        return ((monomial + (letter,), 1),)
    p = ctx.p
    last, head = monomial[-1], monomial[:-1]
    acc: Dict[Monomial, int] = {}
    # head * last * letter = (head * letter) * last + head * [last, letter]
    for m, c in _right_multiply(ctx, head, letter):
        for m2, c2 in _right_multiply(ctx, m, last):
            acc[m2] = (acc.get(m2, 0) + c * c2) % p
    for word, c in ctx.bracket(last, letter):
        for m2, c2 in _multiply_word(ctx, head, word):
            acc[m2] = (acc.get(m2, 0) + c * c2) % p
    return tuple((m, c) for m, c in acc.items() if c)


@lru_cache(maxsize=None)
def _multiply_word(ctx: AlgebraContext, monomial: Monomial, word: Word) -> Tuple[Tuple[Monomial, int], ...]:
    p = ctx.p
    current: Dict[Monomial, int] = {monomial: 1}
    for letter in word:
        nxt: Dict[Monomial, int] = {}
        for m, c in current.items():
            for m2, c2 in _right_multiply(ctx, m, letter):
                nxt[m2] = (nxt.get(m2, 0) + c * c2) % p
        current = {m: c for m, c in nxt.items() if c}
    return tuple(current.items())


def clear_straightening_cache() -> None:
    _right_multiply.cache_clear()
    _multiply_word.cache_clear()


def straightening_cache_info() -> Dict[str, int]:
    info = _right_multiply.cache_info()
    return {"hits": info.hits, "misses": info.misses, "size": info.currsize}


def normalize(word: Iterable[Generator], coeff: int, ctx: AlgebraContext) -> Element:
    """PBW normal form of coeff * word; letters with r = 0 fold to delta_{i,j}."""
    letters: List[Generator] = []
    for g in word:
        g = Generator(*g)
        if g.r == 0 and ctx.min_superscript == 1:
            ctx.check_letter(Generator(1, g.i, g.j))
            if g.i != g.j:
                return ctx.zero()
            continue
        ctx.check_letter(g)
        letters.append(g)
    return Element(ctx, {m: coeff * c for m, c in _multiply_word(ctx, (), tuple(letters))})


def multiply(x: Element, y: Element) -> Element:
    if x.ctx != y.ctx:
        raise ContextMismatchError(f"{x.ctx} vs {y.ctx}")
    ctx = x.ctx
    acc: Dict[Monomial, int] = {}
    for my, cy in y.items():
        for mx, cx in x.items():
            for m, c in _multiply_word(ctx, mx, my):
                acc[m] = acc.get(m, 0) + cx * cy * c
    return Element(ctx, acc)


def commutator(x: Element, y: Element) -> Element:
    return multiply(x, y) - multiply(y, x)


def power(x: Element, k: int) -> Element:
    if k < 0:
        raise MalformedInputError(f"exponent must be nonnegative, got {k}")
    result = x.ctx.unit()
    for _ in range(k):
        result = multiply(result, x)
    return result


def gr_component(x: Element, d: int) -> Element:
    return x.gr_component(d)


def apply_generator_map(
    x: Element,
    images: Mapping[Generator, Element] | Callable[[Generator], Element],
    antihomomorphism: bool = False,
    target: AlgebraContext | None = None,
) -> Element:
    """Extend a letter -> Element table (anti)multiplicatively and linearly."""
    lookup = images if callable(images) else images.__getitem__
    result: Element | None = target.zero() if target is not None else None
    for m, c in x.items():
        factors: List[Element] = []
        for g in m:
            try:
                factors.append(lookup(g))
            except KeyError as exc:
                raise MissingImageError(f"no image for {g}") from exc
        if antihomomorphism:
            factors.reverse()
        if not factors:
            if target is None:
                raise MissingImageError("target context needed to map scalar terms")
            term = target.scalar(c)
        else:
            term = factors[0]
            for f in factors[1:]:
                term = multiply(term, f)
            term = term * c
        result = term if result is None else result + term
    if result is None:
        if target is None:
            raise MissingImageError("target context needed to map zero")
        return target.zero()
    return result


def expand_naive(ctx: AlgebraContext, word: Sequence[Generator]) -> Element:
    """Bubble-sort rewriting without memoization; oracle for the cached core."""
    pending: Dict[Word, int] = {tuple(word): 1}
    done: Dict[Monomial, int] = {}
    while pending:
        w, c = pending.popitem()
        if c % ctx.p == 0:
            continue
        descent = next((k for k in range(len(w) - 1) if w[k] > w[k + 1]), None)
        if descent is None:
            done[w] = done.get(w, 0) + c
            continue
        x, y = w[descent], w[descent + 1]
        swapped = w[:descent] + (y, x) + w[descent + 2:]
        pending[swapped] = pending.get(swapped, 0) + c
        for corr, cc in ctx.bracket(x, y):
            nw = w[:descent] + corr + w[descent + 2:]
            pending[nw] = pending.get(nw, 0) + c * cc
    return Element(ctx, done)


def random_element(ctx: AlgebraContext, rng, max_weight: int = 6, max_terms: int = 3) -> Element:
    """Random element whose monomials have total superscript weight <= max_weight."""
    # a letter of superscript r weighs r + 1 - min_superscript
    offset = 1 - ctx.min_superscript
    result = ctx.zero()
    for _ in range(rng.randint(1, max_terms)):
        budget = rng.randint(0, max_weight)
        letters: List[Generator] = []
        while budget > 0 and rng.random() < 0.75:
            r = rng.randint(ctx.min_superscript, budget - offset)
            letters.append(Generator(r, rng.randint(1, ctx.n), rng.randint(1, ctx.n)))
            budget -= r + offset
        result = result + normalize(letters, rng.randint(1, ctx.p - 1), ctx)
    return result


# --- PBW dimension check ---

def pbw_span_rank(ctx: AlgebraContext, max_degree: int, max_length: int) -> Tuple[int, int]:
    """
    Rank over GF(p) of the normal forms of all words of length <= max_length and
    loop degree <= max_degree, next to the number of commutative monomials in
    e_{i,j} t^s of the same size and degree.
    """
    letters = [Generator(r, i, j)
               for r in range(1, max_degree + 2)
               for i in range(1, ctx.n + 1)
               for j in range(1, ctx.n + 1)]
    field = GF(ctx.p)
    columns: Dict[Monomial, int] = {}
    rows: Dict[int, Dict[int, object]] = {}
    seen = set()
    for length in range(max_length + 1):
        for word in itertools.product(letters, repeat=length):
            if sum(ctx.letter_degree(g) for g in word) > max_degree:
                continue
            nf = normalize(word, 1, ctx)
            if nf.is_zero() or nf in seen:
                continue
            seen.add(nf)
            row: Dict[int, object] = {}
            for m, c in nf.items():
                if len(m) > max_length or nf.monomial_degree(m) > max_degree:
                    raise MalformedInputError(f"normal form of {word} leaves the filtered piece")
                row[columns.setdefault(m, len(columns))] = field(c)
            rows[len(rows)] = row
    rank = DomainMatrix(rows, (len(rows), len(columns)), field).rank() if columns else 0
    symbols = [(s, i, j) for s in range(max_degree + 1) for i in range(ctx.n) for j in range(ctx.n)]
    expected = sum(
        1
        for size in range(max_length + 1)
        for combo in itertools.combinations_with_replacement(symbols, size)
        if sum(sym[0] for sym in combo) <= max_degree
    )
    logger.debug("pbw rank %s expected %s (%s rows)", rank, expected, len(rows))
    return rank, expected
