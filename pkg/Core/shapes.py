# Core/shapes.py
"""Compositions mu of n, shift matrices sigma and their admissible pairing."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Sequence, Tuple

from Core.errors import AdmissibilityError, MalformedInputError, ShiftMatrixError


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        if not self.parts or any(x < 1 for x in self.parts):
            raise MalformedInputError(f"composition parts must be positive, got {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "Composition":
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))
        except ValueError as exc:
            raise MalformedInputError(f"cannot read composition {text!r}") from exc

    @classmethod
    def ones(cls, n: int) -> "Composition":
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    def size(self, a: int) -> int:
        self._check_block(a)
        return self.parts[a - 1]

    def offset(self, a: int) -> int:
        """p_a(mu) = mu_1 + ... + mu_{a-1}."""
        self._check_block(a, allow_end=True)
        return sum(self.parts[: a - 1])

    def block_range(self, a: int) -> range:
        """Global 1-based indices of block a."""
        start = self.offset(a)
        return range(start + 1, start + self.parts[a - 1] + 1)

    def global_index(self, a: int, i: int) -> int:
        if not 1 <= i <= self.size(a):
            raise MalformedInputError(f"inner index {i} out of range for block {a} of {self.parts}")
        return self.offset(a) + i

    def locate(self, index: int) -> Tuple[int, int]:
        """Global index -> (block, inner index)."""
        for a in range(1, self.m + 1):
            if index in self.block_range(a):
                return a, index - self.offset(a)
        raise MalformedInputError(f"index {index} out of range for n={self.n}")

    def tail(self, a: int) -> "Composition":
        """(mu_a, ..., mu_m)."""
        self._check_block(a)
        return Composition(self.parts[a - 1:])

    def refine(self, b: int, x: int) -> "Composition":
        """Split block b into (x, mu_b - x)."""
        size = self.size(b)
        if not 0 < x < size:
            raise MalformedInputError(f"cannot split block of size {size} at {x}")
        return Composition(self.parts[: b - 1] + (x, size - x) + self.parts[b:])

    def _check_block(self, a: int, allow_end: bool = False) -> None:
        upper = self.m + 1 if allow_end else self.m
        if not 1 <= a <= upper:
            raise MalformedInputError(f"block index {a} out of range for {self.parts}")

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of n, coarsest first."""
    for cuts in range(n):
        for positions in itertools.combinations(range(1, n), cuts):
            bounds = (0,) + positions + (n,)
            yield Composition(tuple(bounds[k + 1] - bounds[k] for k in range(len(bounds) - 1)))


@dataclass(frozen=True)
class ShiftMatrix:
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise MalformedInputError("shift matrix must be square and nonempty")
        if any(x < 0 for row in rows for x in row):
            raise MalformedInputError("shift matrix entries must be nonnegative")
        for i, j, k in itertools.product(range(1, n + 1), repeat=3):
            if abs(i - j) + abs(j - k) == abs(i - k) and self.s(i, j) + self.s(j, k) != self.s(i, k):
                raise ShiftMatrixError(
                    (i, j, k),
                    f"s_{i},{j} + s_{j},{k} != s_{i},{k} for the collinear triple ({i}, {j}, {k})",
                )

    @classmethod
    def zero(cls, n: int) -> "ShiftMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "ShiftMatrix":
        """Rows separated by ';', entries by ','; 'zero' needs n."""
        text = text.strip()
        if text == "zero":
            if n is None:
                raise MalformedInputError("'zero' shift matrix needs the size n")
            return cls.zero(n)
        try:
            rows = [tuple(int(x) for x in row.split(",")) for row in text.split(";") if row.strip()]
        except ValueError as exc:
            raise MalformedInputError(f"cannot read shift matrix {text!r}") from exc
        return cls(tuple(rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def s(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class ShiftData:
    """An admissible pair (sigma, mu) with its block shift table."""

    sigma: ShiftMatrix
    mu: Composition
    table: Dict[Tuple[int, int], int] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.sigma.n != self.mu.n:
            raise MalformedInputError(f"shift matrix of size {self.sigma.n} against composition of {self.mu.n}")
        for a in range(1, self.mu.m + 1):
            for i, j in itertools.product(self.mu.block_range(a), repeat=2):
                if self.sigma.s(i, j) != 0:
                    raise AdmissibilityError(i, j, f"s_{i},{j} = {self.sigma.s(i, j)} inside diagonal block {a} of {self.mu}")
        table = {}
        for a, b in itertools.product(range(1, self.mu.m + 1), repeat=2):
            table[(a, b)] = self.sigma.s(self.mu.offset(a + 1), self.mu.offset(b + 1))
        object.__setattr__(self, "table", table)

    def s_mu(self, a: int, b: int) -> int:
        return self.table[(a, b)]

    @property
    def n(self) -> int:
        return self.mu.n

    @property
    def m(self) -> int:
        return self.mu.m


def shift_data(sigma: ShiftMatrix, mu: Composition) -> ShiftData:
    return ShiftData(sigma, mu)


def parse_sigma(rows: Sequence[Sequence[int]] | str, n: int) -> ShiftMatrix:
    if isinstance(rows, str):
        return ShiftMatrix.parse(rows, n)
    return ShiftMatrix(tuple(tuple(r) for r in rows))
