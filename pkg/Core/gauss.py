# Core/gauss.py
"""
Block Gauss decomposition T(u) = F(u) D(u) E(u) for a composition mu, plus
the quasideterminant formulas kept as an independent second path.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from Core.errors import MalformedInputError, SingularSeriesError
from Core.series_ring import SeriesMatrix, block_matrix, zero_matrix
from Core.shapes import Composition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaussFactors:
    mu: Composition
    D: Tuple[SeriesMatrix, ...]
    D_prime: Tuple[SeriesMatrix, ...]
    E: Dict[Tuple[int, int], SeriesMatrix] = field(hash=False)
    F: Dict[Tuple[int, int], SeriesMatrix] = field(hash=False)

    def d(self, a: int) -> SeriesMatrix:
        return self.D[a - 1]

    def d_prime(self, a: int) -> SeriesMatrix:
        return self.D_prime[a - 1]

    def e(self, a: int, b: int) -> SeriesMatrix:
        if not 1 <= a < b <= self.mu.m:
            raise MalformedInputError(f"E block ({a}, {b}) needs 1 <= a < b <= {self.mu.m}")
        return self.E[(a, b)]

    def f(self, b: int, a: int) -> SeriesMatrix:
        if not 1 <= a < b <= self.mu.m:
            raise MalformedInputError(f"F block ({b}, {a}) needs 1 <= a < b <= {self.mu.m}")
        return self.F[(b, a)]

    def lower(self) -> SeriesMatrix:
        return self._assemble(lambda a, b: self.F.get((a, b)), unit_diagonal=True)

    def diagonal(self) -> SeriesMatrix:
        return self._assemble(lambda a, b: self.D[a - 1] if a == b else None, unit_diagonal=False)

    def upper(self) -> SeriesMatrix:
        return self._assemble(lambda a, b: self.E.get((a, b)), unit_diagonal=True)

    def reassemble(self) -> SeriesMatrix:
        """F(u) D(u) E(u)."""
        return self.lower() @ self.diagonal() @ self.upper()

    def _assemble(self, pick, unit_diagonal: bool) -> SeriesMatrix:
        ctx, order, mu = self.D[0].ctx, self.D[0].order, self.mu
        rows = []
        for a in range(1, mu.m + 1):
            row = []
            for b in range(1, mu.m + 1):
                block = pick(a, b)
                if block is None:
                    if a == b and unit_diagonal:
                        block = SeriesMatrix.identity(ctx, mu.size(a), order)
                    else:
                        block = zero_matrix(ctx, mu.size(a), mu.size(b), order)
                row.append(block)
            rows.append(row)
        return block_matrix(rows)


def _blocks(mu: Composition, first: int, last: int) -> List[int]:
    """Global indices of blocks first..last."""
    out: List[int] = []
    for a in range(first, last + 1):
        out.extend(mu.block_range(a))
    return out


def gauss_decompose(T: SeriesMatrix, mu: Composition) -> GaussFactors:
    """Iterated two-block Schur complements, left to right over mu."""
    if T.rows != T.cols or T.rows != mu.n:
        raise MalformedInputError(f"matrix of size {T.rows}x{T.cols} against composition of {mu.n}")
    if not T.is_identity_constant():
        raise SingularSeriesError("Gauss decomposition needs constant term equal to the identity")
    D: List[SeriesMatrix] = []
    D_prime: List[SeriesMatrix] = []
    E: Dict[Tuple[int, int], SeriesMatrix] = {}
    F: Dict[Tuple[int, int], SeriesMatrix] = {}
    # S is the running Schur complement on blocks a..m, indexed locally from 1
    S = T
    for a in range(1, mu.m + 1):
        local = Composition(mu.parts[a - 1:])
        head = list(local.block_range(1))
        d = S.submatrix(head, head)
        d_inv = d.inverse()
        D.append(d)
        D_prime.append(d_inv)
        if a == mu.m:
            break
        rest = _blocks(local, 2, local.m)
        upper = d_inv @ S.submatrix(head, rest)
        lower = S.submatrix(rest, head) @ d_inv
        for b in range(a + 1, mu.m + 1):
            cols = [k - len(head) for k in local.block_range(b - a + 1)]
            E[(a, b)] = upper.submatrix(range(1, len(head) + 1), cols)
            F[(b, a)] = lower.submatrix(cols, range(1, len(head) + 1))
        S = S.submatrix(rest, rest) - S.submatrix(rest, head) @ upper
    logger.debug("gauss decomposition of size %s for mu=%s done", mu.n, mu)
    return GaussFactors(mu, tuple(D), tuple(D_prime), E, F)


def quasideterminant(T: SeriesMatrix, mu: Composition, a: int, variant: str = "D", b: int | None = None) -> SeriesMatrix:
    """
    D_a = T_aa - T_{a,<a} (T_{<a,<a})^{-1} T_{<a,a};
    E_{a,b} = D_a^{-1} (T_ab - T_{a,<a} (T_{<a,<a})^{-1} T_{<a,b});
    F_{b,a} = (T_ba - T_{b,<a} (T_{<a,<a})^{-1} T_{<a,a}) D_a^{-1}.
    """
    if not 1 <= a <= mu.m:
        raise MalformedInputError(f"block {a} out of range for {mu}")
    if variant not in ("D", "E", "F"):
        raise MalformedInputError(f"unknown quasideterminant variant {variant!r}")
    if variant != "D" and (b is None or not a < b <= mu.m):
        raise MalformedInputError(f"variant {variant} needs a < b <= {mu.m}, got b={b}")
    corner = _blocks(mu, 1, a - 1)
    rows_a = list(mu.block_range(a))

    def complement(rows: List[int], cols: List[int]) -> SeriesMatrix:
        block = T.submatrix(rows, cols)
        if not corner:
            return block
        inv = T.submatrix(corner, corner).inverse()
        return block - T.submatrix(rows, corner) @ inv @ T.submatrix(corner, cols)

    d = complement(rows_a, rows_a)
    if variant == "D":
        return d
    rows_b = list(mu.block_range(b))
    if variant == "E":
        return d.inverse() @ complement(rows_a, rows_b)
    return complement(rows_b, rows_a) @ d.inverse()


def split_block_check(T: SeriesMatrix, mu: Composition, b: int, x: int) -> Dict[str, bool]:
    """
    Compare the factors for mu and for its refinement nu splitting block b
    into (x, mu_b - x), through the Gauss decomposition of D_b itself.
    """
    nu = mu.refine(b, x)
    y = mu.size(b) - x
    coarse = gauss_decompose(T, mu)
    fine = gauss_decompose(T, nu)
    inner = gauss_decompose(coarse.d(b), Composition((x, y)))
    first_x = range(1, x + 1)
    last_y = range(x + 1, x + y + 1)
    results: Dict[str, bool] = {}
    for a in range(1, b):
        results[f"D{a}"] = fine.d(a) == coarse.d(a)
    results[f"D{b}=A"] = fine.d(b) == inner.d(1)
    results[f"D{b + 1}=D"] = fine.d(b + 1) == inner.d(2)
    for c in range(b + 2, nu.m + 1):
        results[f"D{c}"] = fine.d(c) == coarse.d(c - 1)
    results[f"E{b}=B"] = fine.e(b, b + 1) == inner.e(1, 2)
    results[f"F{b}=C"] = fine.f(b + 1, b) == inner.f(2, 1)
    for a in range(1, b - 1):
        results[f"E{a}"] = fine.e(a, a + 1) == coarse.e(a, a + 1)
        results[f"F{a}"] = fine.f(a + 1, a) == coarse.f(a + 1, a)
    if b > 1:
        e_prev = coarse.e(b - 1, b)
        f_prev = coarse.f(b, b - 1)
        results[f"E{b - 1}=cols"] = fine.e(b - 1, b) == e_prev.submatrix(range(1, e_prev.rows + 1), first_x)
        results[f"F{b - 1}=rows"] = fine.f(b, b - 1) == f_prev.submatrix(first_x, range(1, f_prev.cols + 1))
    if b < mu.m:
        e_next = coarse.e(b, b + 1)
        f_next = coarse.f(b + 1, b)
        results[f"E{b + 1}=rows"] = fine.e(b + 1, b + 2) == e_next.submatrix(last_y, range(1, e_next.cols + 1))
        results[f"F{b + 1}=cols"] = fine.f(b + 2, b + 1) == f_next.submatrix(range(1, f_next.rows + 1), last_y)
    for c in range(b + 2, nu.m):
        results[f"E{c}"] = fine.e(c, c + 1) == coarse.e(c - 1, c)
        results[f"F{c}"] = fine.f(c + 1, c) == coarse.f(c, c - 1)
    return results
