# Core/series_ring.py
"""
Truncated series in u^{-1} (and u^{-1}, v^{-1}) with Element coefficients.

Every operation is lower triangular in the coefficient index, so each
retained coefficient is exact: nothing beyond the truncation order feeds
into a retained coefficient.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from Core.errors import BudgetError, ContextMismatchError, MalformedInputError, SingularSeriesError
from Core.pbw_engine import AlgebraContext, Element, multiply
from Utils.modular import binomial_mod_p

Scalar = Union[int, Element]


def binomial(m: int, k: int, p: int) -> int:
    return binomial_mod_p(m, k, p)


class TruncatedSeries:
    """f(u) = sum_{r=0}^{N} f^{(r)} u^{-r}."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: AlgebraContext, coeffs: Sequence[Scalar]) -> None:
        if not coeffs:
            raise MalformedInputError("a series needs at least its constant coefficient")
        self.ctx = ctx
        self.coeffs: Tuple[Element, ...] = tuple(_as_element(ctx, c) for c in coeffs)

    @classmethod
    def constant(cls, ctx: AlgebraContext, value: Scalar, order: int) -> "TruncatedSeries":
        return cls(ctx, [value] + [0] * order)

    @classmethod
    def zero(cls, ctx: AlgebraContext, order: int) -> "TruncatedSeries":
        return cls.constant(ctx, 0, order)

    @classmethod
    def rtt(cls, ctx: AlgebraContext, i: int, j: int, order: int) -> "TruncatedSeries":
        """t_{i,j}(u)."""
        return cls(ctx, [ctx.gen(i, j, r) for r in range(order + 1)])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, r: int) -> Element:
        if r > self.order:
            raise BudgetError(r, self.order)
        if r < 0:
            return self.ctx.zero()
        return self.coeffs[r]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise BudgetError(order, self.order, "truncation")
        return TruncatedSeries(self.ctx, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def valuation(self) -> int | None:
        """Smallest r with f^{(r)} != 0."""
        return next((r for r, c in enumerate(self.coeffs) if not c.is_zero()), None)

    def _check(self, other: "TruncatedSeries") -> None:
        if other.ctx != self.ctx:
            raise ContextMismatchError(f"{self.ctx} vs {other.ctx}")
        if other.order != self.order:
            raise MalformedInputError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.ctx, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.ctx, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.ctx, [-a for a in self.coeffs])

    def __mul__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._check(other)
            out = []
            for r in range(self.order + 1):
                acc = self.ctx.zero()
                for s in range(r + 1):
                    f, g = self.coeffs[s], other.coeffs[r - s]
                    if f and g:
                        acc = acc + multiply(f, g)
                out.append(acc)
            return TruncatedSeries(self.ctx, out)
        return TruncatedSeries(self.ctx, [c * other for c in self.coeffs])

    def __rmul__(self, other: Scalar) -> "TruncatedSeries":
        return TruncatedSeries(self.ctx, [other * c for c in self.coeffs])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    def __repr__(self) -> str:
        return "TruncatedSeries(" + ", ".join(f"u^-{r}: {c!r}" for r, c in enumerate(self.coeffs) if c) + ")"

    def power(self, k: int) -> "TruncatedSeries":
        result = TruncatedSeries.constant(self.ctx, 1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, c: int) -> "TruncatedSeries":
        return shift_argument(self, c)

    def sign_twist(self) -> "TruncatedSeries":
        """f(-u)."""
        return TruncatedSeries(self.ctx, [c if r % 2 == 0 else -c for r, c in enumerate(self.coeffs)])

    def inverse(self) -> "TruncatedSeries":
        return series_inverse(self)


def _as_element(ctx: AlgebraContext, value: Scalar) -> Element:
    if isinstance(value, Element):
        if value.ctx != ctx:
            raise ContextMismatchError(f"{value.ctx} vs {ctx}")
        return value
    return ctx.scalar(int(value))


def series_arith(op: str, f: TruncatedSeries, g: Union[TruncatedSeries, Scalar]) -> TruncatedSeries:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "scalarMul":
        return f * g
    raise MalformedInputError(f"unknown series operation {op!r}")


def shift_argument(f: TruncatedSeries, c: int) -> TruncatedSeries:
    """f(u + c), using (u + c)^{-r} = sum_k binom(r+k-1, k) (-c)^k u^{-r-k}."""
    p = f.ctx.p
    minus_c = (-c) % p
    out = [f.coeffs[0]]
    for m in range(1, f.order + 1):
        acc = f.ctx.zero()
        for r in range(1, m + 1):
            scalar = binomial(m - 1, m - r, p) * pow(minus_c, m - r, p) % p
            if scalar:
                acc = acc + f.coeffs[r] * scalar
        out.append(acc)
    return TruncatedSeries(f.ctx, out)


def series_inverse(f: Union[TruncatedSeries, "SeriesMatrix"]) -> Union[TruncatedSeries, "SeriesMatrix"]:
    """Inverse by g_r = -sum_{s=1..r} f_s g_{r-s}; needs identity constant term."""
    if isinstance(f, SeriesMatrix):
        return f.inverse()
    if f.coeffs[0] != f.ctx.unit():
        raise SingularSeriesError(f"constant term {f.coeffs[0]!r} is not 1")
    g = [f.ctx.unit()]
    for r in range(1, f.order + 1):
        acc = f.ctx.zero()
        for s in range(1, r + 1):
            if f.coeffs[s] and g[r - s]:
                acc = acc + multiply(f.coeffs[s], g[r - s])
        g.append(-acc)
    return TruncatedSeries(f.ctx, g)


ElementMatrix = List[List[Element]]


def _matmul_elements(ctx: AlgebraContext, a: ElementMatrix, b: ElementMatrix) -> ElementMatrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = ctx.zero()
            for k in range(inner):
                if a[i][k] and b[k][j]:
                    acc = acc + multiply(a[i][k], b[k][j])
            row.append(acc)
        out.append(row)
    return out


class SeriesMatrix:
    """Matrix of truncated series sharing one context and truncation order."""

    __slots__ = ("ctx", "entries")

    def __init__(self, entries: Sequence[Sequence[TruncatedSeries]]) -> None:
        rows = [list(row) for row in entries]
        if not rows or not rows[0]:
            raise MalformedInputError("series matrix must be nonempty")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise MalformedInputError("ragged series matrix")
        first = rows[0][0]
        for row in rows:
            for entry in row:
                first._check(entry)
        self.ctx = first.ctx
        self.entries: Tuple[Tuple[TruncatedSeries, ...], ...] = tuple(tuple(row) for row in rows)

    @classmethod
    def rtt(cls, ctx: AlgebraContext, order: int) -> "SeriesMatrix":
        """T(u)."""
        return cls([[TruncatedSeries.rtt(ctx, i, j, order) for j in range(1, ctx.n + 1)] for i in range(1, ctx.n + 1)])

    @classmethod
    def identity(cls, ctx: AlgebraContext, size: int, order: int) -> "SeriesMatrix":
        return cls([[TruncatedSeries.constant(ctx, int(i == j), order) for j in range(size)] for i in range(size)])

    @classmethod
    def from_coefficients(cls, ctx: AlgebraContext, coeffs: Sequence[ElementMatrix]) -> "SeriesMatrix":
        rows, cols = len(coeffs[0]), len(coeffs[0][0])
        return cls([[TruncatedSeries(ctx, [c[i][j] for c in coeffs]) for j in range(cols)] for i in range(rows)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def order(self) -> int:
        return self.entries[0][0].order

    def at(self, i: int, j: int) -> TruncatedSeries:
        """1-based entry access."""
        return self.entries[i - 1][j - 1]

    def coefficient_matrix(self, r: int) -> ElementMatrix:
        return [[entry.coeff(r) for entry in row] for row in self.entries]

    def submatrix(self, row_indices: Iterable[int], col_indices: Iterable[int]) -> "SeriesMatrix":
        cols = list(col_indices)
        return SeriesMatrix([[self.at(i, j) for j in cols] for i in row_indices])

    def _check(self, other: "SeriesMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise MalformedInputError(f"shape {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        self._check(other)
        return SeriesMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        self._check(other)
        return SeriesMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> "SeriesMatrix":
        return SeriesMatrix([[-a for a in row] for row in self.entries])

    def __matmul__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        if self.cols != other.rows:
            raise MalformedInputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.entries[i][0] * other.entries[0][j]
                for k in range(1, self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return SeriesMatrix(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def map(self, fn) -> "SeriesMatrix":
        return SeriesMatrix([[fn(entry) for entry in row] for row in self.entries])

    def shift(self, c: int) -> "SeriesMatrix":
        return self.map(lambda f: f.shift(c))

    def sign_twist(self) -> "SeriesMatrix":
        return self.map(TruncatedSeries.sign_twist)

    def is_identity_constant(self) -> bool:
        base = self.coefficient_matrix(0)
        return self.rows == self.cols and all(
            base[i][j] == int(i == j) for i in range(self.rows) for j in range(self.cols)
        )

    def inverse(self) -> "SeriesMatrix":
        if not self.is_identity_constant():
            raise SingularSeriesError("constant term is not the identity matrix")
        size = self.rows
        f = [self.coefficient_matrix(r) for r in range(self.order + 1)]
        g: List[ElementMatrix] = [[[self.ctx.scalar(int(i == j)) for j in range(size)] for i in range(size)]]
        for r in range(1, self.order + 1):
            acc = [[self.ctx.zero() for _ in range(size)] for _ in range(size)]
            for s in range(1, r + 1):
                prod = _matmul_elements(self.ctx, f[s], g[r - s])
                acc = [[acc[i][j] + prod[i][j] for j in range(size)] for i in range(size)]
            g.append([[-acc[i][j] for j in range(size)] for i in range(size)])
        return SeriesMatrix.from_coefficients(self.ctx, g)

    def __repr__(self) -> str:
        return f"SeriesMatrix({self.rows}x{self.cols}, order={self.order})"


def block_matrix(blocks: Sequence[Sequence[SeriesMatrix]]) -> SeriesMatrix:
    rows: List[List[TruncatedSeries]] = []
    for block_row in blocks:
        for i in range(block_row[0].rows):
            row: List[TruncatedSeries] = []
            for block in block_row:
                row.extend(block.entries[i])
            rows.append(row)
    return SeriesMatrix(rows)


def zero_matrix(ctx: AlgebraContext, rows: int, cols: int, order: int) -> SeriesMatrix:
    return SeriesMatrix([[TruncatedSeries.zero(ctx, order) for _ in range(cols)] for _ in range(rows)])


class BivariateSeries:
    """sum_{r+s <= M} x_{r,s} u^{-r} v^{-s}."""

    __slots__ = ("ctx", "order", "_coeffs")

    def __init__(self, ctx: AlgebraContext, coeffs: Mapping[Tuple[int, int], Scalar], order: int) -> None:
        self.ctx = ctx
        self.order = order
        self._coeffs: Dict[Tuple[int, int], Element] = {}
        for (r, s), c in coeffs.items():
            if r + s <= order:
                c = _as_element(ctx, c)
                if c:
                    self._coeffs[(r, s)] = c

    @classmethod
    def in_u(cls, f: TruncatedSeries, order: int) -> "BivariateSeries":
        if f.order < order:
            raise BudgetError(order, f.order, "bivariate order")
        return cls(f.ctx, {(r, 0): f.coeffs[r] for r in range(order + 1)}, order)

    @classmethod
    def in_v(cls, f: TruncatedSeries, order: int) -> "BivariateSeries":
        if f.order < order:
            raise BudgetError(order, f.order, "bivariate order")
        return cls(f.ctx, {(0, s): f.coeffs[s] for s in range(order + 1)}, order)

    @classmethod
    def constant(cls, ctx: AlgebraContext, value: Scalar, order: int) -> "BivariateSeries":
        return cls(ctx, {(0, 0): value}, order)

    def coeff(self, r: int, s: int) -> Element:
        if r + s > self.order:
            raise BudgetError(r + s, self.order, "bivariate coefficient")
        return self._coeffs.get((r, s), self.ctx.zero())

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other: "BivariateSeries") -> None:
        if other.ctx != self.ctx:
            raise ContextMismatchError(f"{self.ctx} vs {other.ctx}")
        if other.order != self.order:
            raise MalformedInputError(f"bivariate orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        acc = dict(self._coeffs)
        for key, c in other._coeffs.items():
            acc[key] = acc[key] + c if key in acc else c
        return BivariateSeries(self.ctx, acc, self.order)

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries(self.ctx, {k: -c for k, c in self._coeffs.items()}, self.order)

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        return self + (-other)

    def __mul__(self, other: Union["BivariateSeries", Scalar]) -> "BivariateSeries":
        if not isinstance(other, BivariateSeries):
            return BivariateSeries(self.ctx, {k: c * other for k, c in self._coeffs.items()}, self.order)
        self._check(other)
        acc: Dict[Tuple[int, int], Element] = {}
        for (r1, s1), x in self._coeffs.items():
            for (r2, s2), y in other._coeffs.items():
                key = (r1 + r2, s1 + s2)
                if key[0] + key[1] > self.order:
                    continue
                prod = multiply(x, y)
                acc[key] = acc[key] + prod if key in acc else prod
        return BivariateSeries(self.ctx, acc, self.order)

    def __rmul__(self, other: Scalar) -> "BivariateSeries":
        return BivariateSeries(self.ctx, {k: other * c for k, c in self._coeffs.items()}, self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self.ctx == other.ctx and self.order == other.order and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        return "BivariateSeries(" + ", ".join(f"u^-{r}v^-{s}: {c!r}" for (r, s), c in self.items()) + ")"

    def power(self, k: int) -> "BivariateSeries":
        result = BivariateSeries.constant(self.ctx, 1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def commutator(self, other: "BivariateSeries") -> "BivariateSeries":
        return self * other - other * self

    def times_u_minus_v(self) -> Tuple["BivariateSeries", Dict[Tuple[str, int], Element]]:
        """
        (u - v) * self, exact to order M - 1, plus the coefficients of the
        positive powers u^1 v^{-s} and v^1 u^{-r} reported separately.
        """
        out: Dict[Tuple[int, int], Element] = {}
        for r in range(self.order):
            for s in range(self.order - r):
                out[(r, s)] = self.coeff(r + 1, s) - self.coeff(r, s + 1)
        boundary: Dict[Tuple[str, int], Element] = {}
        for s in range(self.order + 1):
            if self.coeff(0, s):
                boundary[("u", s)] = self.coeff(0, s)
        for r in range(self.order + 1):
            if self.coeff(r, 0):
                boundary[("v", r)] = -self.coeff(r, 0)
        return BivariateSeries(self.ctx, out, self.order - 1), boundary

    def truncate(self, order: int) -> "BivariateSeries":
        if order > self.order:
            raise BudgetError(order, self.order, "bivariate truncation")
        return BivariateSeries(self.ctx, self._coeffs, order)

    def first_difference(self, other: "BivariateSeries") -> Tuple[Tuple[int, int], Element] | None:
        diff = self - other
        items = diff.items()
        return items[0] if items else None


def falling_product(f: TruncatedSeries, ell: int) -> TruncatedSeries:
    """f(u) f(u-1) ... f(u-ell+1); the empty product is 1."""
    result = TruncatedSeries.constant(f.ctx, 1, f.order)
    for q in range(ell):
        result = result * shift_argument(f, -q)
    return result


def rising_product(f: TruncatedSeries, ell: int) -> TruncatedSeries:
    """f(u) f(u+1) ... f(u+ell-1)."""
    result = TruncatedSeries.constant(f.ctx, 1, f.order)
    for q in range(ell):
        result = result * shift_argument(f, q)
    return result
