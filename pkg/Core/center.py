# Core/center.py
"""
Central elements of Y_n and Y_n(sigma) over F_p: the Harish-Chandra series
c(u) and bc(u), quantum determinants of the diagonal blocks, the diagonal
p-central series B(u), p-th powers of root series and of shifted root
elements, with finite-budget centrality certificates and gr checks.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from sympy.combinatorics import Permutation

from Core.checks import Params, compare, truth
from Core.current_algebra import CurrentAlgebraContext, current_context, gr_identify, leading_monomial, z
from Core.errors import BudgetError, DegreeOverflowError, MalformedInputError
from Core.parabolic import ParabolicAlgebra, higher_root, parabolic_algebra, shifted_generator_set
from Core.pbw_engine import AlgebraContext, Element, commutator
from Core.schemas import CentralityCertificate, CheckReport
from Core.series_ring import SeriesMatrix, TruncatedSeries, falling_product, shift_argument
from Core.shapes import Composition, ShiftData, compositions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CentralSeries:
    kind: str
    label: str
    series: TruncatedSeries
    provenance: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def coeff(self, r: int) -> Element:
        return self.series.coeff(r)


# --- Harish-Chandra series ---

def quantum_determinant(D: SeriesMatrix) -> TruncatedSeries:
    """sum_sigma sgn(sigma) D_{sigma(1),1}(u) D_{sigma(2),2}(u-1) ... in this factor order."""
    if D.rows != D.cols:
        raise MalformedInputError(f"quantum determinant of a {D.rows}x{D.cols} block")
    size = D.rows
    ctx = D.at(1, 1).ctx
    total = TruncatedSeries.zero(ctx, D.order)
    for images in itertools.permutations(range(size)):
        term = TruncatedSeries.constant(ctx, 1, D.order)
        for col, row in enumerate(images):
            term = term * shift_argument(D.at(row + 1, col + 1), -col)
        total = total + term * Permutation(list(images)).signature()
    return total


def drinfeld_diagonal(ctx: AlgebraContext, order: int) -> List[TruncatedSeries]:
    """d_1(u), ..., d_n(u) from the decomposition for (1, ..., 1)."""
    alg = parabolic_algebra(ctx, Composition.ones(ctx.n), order)
    return [alg.D_series(k, 1, 1) for k in range(1, ctx.n + 1)]


def hc_series(kind: str, ctx: AlgebraContext, order: int) -> CentralSeries:
    """c(u) = d_1(u) d_2(u-1) ... d_n(u-n+1); bc(u) = c(u) c(u-1) ... c(u-p+1)."""
    c = TruncatedSeries.constant(ctx, 1, order)
    for k, d in enumerate(drinfeld_diagonal(ctx, order)):
        c = c * shift_argument(d, -k)
    provenance = {"n": ctx.n, "p": ctx.p, "order": order}
    if kind == "c":
        return CentralSeries("c", "c", c, provenance)
    if kind == "bc":
        return CentralSeries("bc", "bc", falling_product(c, ctx.p), provenance)
    raise MalformedInputError(f"unknown Harish-Chandra series {kind!r}")


def factorized_c(ctx: AlgebraContext, mu: Composition, order: int) -> TruncatedSeries:
    """qdet D_1(u - p_1) ... qdet D_m(u - p_m)."""
    factors = parabolic_algebra(ctx, mu, order).factors
    result = TruncatedSeries.constant(ctx, 1, order)
    for a in range(1, mu.m + 1):
        result = result * shift_argument(quantum_determinant(factors.d(a)), -mu.offset(a))
    return result


def verify_factorization(ctx: AlgebraContext, mu: Composition, order: int) -> CheckReport:
    params = {"mu": list(mu.parts)}
    return compare("hc-factorization", params, hc_series("c", ctx, order).series, factorized_c(ctx, mu, order))


# --- p-central series ---

def b_series(alg: ParabolicAlgebra, a: int, i: int, j: int) -> CentralSeries:
    """B_{a;i,j}(u) = D_{a;i,j}(u) D_{a;i,j}(u-1) ... D_{a;i,j}(u-p+1)."""
    series = falling_product(alg.D_series(a, i, j), alg.ctx.p)
    return CentralSeries("B", f"B[{a};{i},{j}]", series, {"mu": list(alg.mu.parts)})


def p_series(alg: ParabolicAlgebra, a: int, b: int, i: int, j: int) -> CentralSeries:
    """P = E_{a,b;i,j}(u)^p."""
    series = alg.series("E", a, b, i, j).power(alg.ctx.p)
    return CentralSeries("P", f"P[{a},{b};{i},{j}]", series, {"mu": list(alg.mu.parts)})


def q_series(alg: ParabolicAlgebra, b: int, a: int, i: int, j: int) -> CentralSeries:
    """Q = F_{b,a;i,j}(u)^p."""
    series = alg.series("F", b, a, i, j).power(alg.ctx.p)
    return CentralSeries("Q", f"Q[{b},{a};{i},{j}]", series, {"mu": list(alg.mu.parts)})


def s_series(ctx: AlgebraContext, i: int, j: int, order: int) -> CentralSeries:
    """s_{i,j}(u) = t_{i,j}(u) t_{i,j}(u-1) ... t_{i,j}(u-p+1)."""
    series = falling_product(TruncatedSeries.rtt(ctx, i, j, order), ctx.p)
    return CentralSeries("s", f"s[{i},{j}]", series)


def drinfeld_b_series(ctx: AlgebraContext, k: int, order: int) -> CentralSeries:
    """b_k(u) = d_k(u) d_k(u-1) ... d_k(u-p+1)."""
    series = falling_product(drinfeld_diagonal(ctx, order)[k - 1], ctx.p)
    return CentralSeries("b", f"b[{k}]", series)


def shifted_root_power(alg: ParabolicAlgebra, side: str, a: int, b: int, i: int, j: int, r: int, data: ShiftData) -> Element:
    """(sE^{(r)}_{a,b;i,j})^p or (sF^{(r)}_{b,a;i,j})^p."""
    return higher_root(alg, side, a, b, i, j, r, 1, data) ** alg.ctx.p


def p_central_series(kind: str, alg: ParabolicAlgebra, indices: Sequence[int], data: ShiftData | None = None) -> CentralSeries | Element:
    if kind == "B":
        return b_series(alg, *indices)
    if kind == "P":
        return p_series(alg, *indices)
    if kind == "Q":
        return q_series(alg, *indices)
    if kind in ("sigmaEPow", "sigmaFPow"):
        if data is None:
            raise MalformedInputError(f"{kind} needs shift data")
        return shifted_root_power(alg, "E" if kind == "sigmaEPow" else "F", *indices, data=data)
    raise MalformedInputError(f"unknown p-central kind {kind!r}")


# --- centrality ---

def full_test_family(ctx: AlgebraContext, budget: int) -> List[Tuple[str, Element]]:
    """t_{i,j}^{(s)} for s <= budget."""
    return [
        (f"t{i}{j}^({s})", ctx.gen(i, j, s))
        for s in range(1, budget + 1)
        for i, j in itertools.product(range(1, ctx.n + 1), repeat=2)
    ]


def shifted_test_family(alg: ParabolicAlgebra, data: ShiftData, budget: int) -> List[Tuple[str, Element]]:
    return [(idx.label(), alg.coefficient(idx)) for idx in shifted_generator_set(data, budget)]


def centrality_check(
    check_id: str,
    params: Params,
    x: Element,
    budget: int,
    alg: ParabolicAlgebra | None = None,
    data: ShiftData | None = None,
) -> CentralityCertificate:
    """Commute x against the generators up to ``budget``; shifted scope when data has a nonzero sigma."""
    shifted = data is not None and not data.sigma.is_zero()
    scope = "shifted" if shifted else "full"
    try:
        if shifted:
            if alg is None:
                raise MalformedInputError("shifted centrality needs the parabolic algebra of the shape")
            family = shifted_test_family(alg, data, budget)
        else:
            family = full_test_family(x.ctx, budget)
    except BudgetError as exc:
        return CentralityCertificate(id=check_id, params=params, status="skipped", note=f"budget: {exc}", scope=scope, budget=budget)
    for tested, (label, y) in enumerate(family, start=1):
        witness = commutator(x, y)
        if not witness.is_zero():
            logger.warning("%s at %s does not commute with %s", check_id, params, label)
            return CentralityCertificate(
                id=check_id, params=params, status="fail", witness=witness.serialize(),
                scope=scope, budget=budget, tested=tested, failing_against=label,
            )
    return CentralityCertificate(id=check_id, params=params, status="pass", scope=scope, budget=budget, tested=len(family))


def gr_leading_check(check_id: str, params: Params, x: Element, expected: Element, d: int, mu: Composition | None = None) -> CheckReport:
    """gr_d x under t^{(r+1)} -> e t^r against an expected U(g) element."""
    try:
        image = gr_identify(x, d, mu)
    except DegreeOverflowError as exc:
        return truth(check_id, params, False, f"degree overflow: {exc}")
    return compare(check_id, params, image, expected)


# --- gr expectations ---

def _e(cctx: CurrentAlgebraContext, mu: Composition, a: int, b: int, i: int, j: int, r: int) -> Element:
    return cctx.basis(mu.global_index(a, i), mu.global_index(b, j), r)


def expected_b(cctx: CurrentAlgebraContext, mu: Composition, a: int, i: int, j: int, r: int) -> Element:
    """(e_{a,a;i,j} t^{r-1})^p - delta_{i,j} e_{a,a;i,j} t^{rp-p}."""
    p = cctx.p
    out = _e(cctx, mu, a, a, i, j, r - 1) ** p
    if i == j:
        out = out - _e(cctx, mu, a, a, i, j, r * p - p)
    return out


def expected_root_power(cctx: CurrentAlgebraContext, mu: Composition, a: int, b: int, i: int, j: int, r: int) -> Element:
    """(e_{a,b;i,j} t^{r-1})^p."""
    return _e(cctx, mu, a, b, i, j, r - 1) ** cctx.p


def expected_bc(cctx: CurrentAlgebraContext, r: int) -> Element:
    """z_{r-1}^p - z_{rp-p}."""
    p = cctx.p
    return z(cctx, r - 1) ** p - z(cctx, r * p - p)


@dataclass(frozen=True)
class PCenterGenerator:
    label: str
    element: Element
    expected: Element
    degree: int


def p_center_generators(alg: ParabolicAlgebra, data: ShiftData, budget: int) -> List[PCenterGenerator]:
    """B^{(rp)}_{a;i,j}, (sE^{(r)})^p and (sF^{(r)})^p with rp <= budget, each with its gr image."""
    mu, p = alg.mu, alg.ctx.p
    cctx = current_context(alg.ctx.n, p)
    out: List[PCenterGenerator] = []
    for a in range(1, mu.m + 1):
        for i, j in itertools.product(range(1, mu.size(a) + 1), repeat=2):
            series = b_series(alg, a, i, j)
            for r in range(1, budget // p + 1):
                out.append(PCenterGenerator(
                    f"B[{a};{i},{j}]({r * p})", series.coeff(r * p), expected_b(cctx, mu, a, i, j, r), r * p - p,
                ))
    for a, b in itertools.combinations(range(1, mu.m + 1), 2):
        for i, j in itertools.product(range(1, mu.size(a) + 1), range(1, mu.size(b) + 1)):
            for r in range(data.s_mu(a, b) + 1, budget // p + 1):
                out.append(PCenterGenerator(
                    f"sE[{a},{b};{i},{j}]({r})^p", shifted_root_power(alg, "E", a, b, i, j, r, data),
                    expected_root_power(cctx, mu, a, b, i, j, r), r * p - p,
                ))
        for i, j in itertools.product(range(1, mu.size(b) + 1), range(1, mu.size(a) + 1)):
            for r in range(data.s_mu(b, a) + 1, budget // p + 1):
                out.append(PCenterGenerator(
                    f"sF[{b},{a};{i},{j}]({r})^p", shifted_root_power(alg, "F", a, b, i, j, r, data),
                    expected_root_power(cctx, mu, b, a, i, j, r), r * p - p,
                ))
    return out


def p_center_budget(data: ShiftData, p: int, budget: int) -> int:
    """At least ``budget``, and high enough that every shifted root reaches its first p-th power."""
    mu = data.mu
    lowest = max((data.s_mu(a, b) + 1 for a, b in itertools.permutations(range(1, mu.m + 1), 2)), default=1)
    return max(budget, lowest * p)


def leading_terms_distinct(generators: Sequence[PCenterGenerator]) -> CheckReport:
    seen: Dict[Tuple, str] = {}
    for gen in generators:
        key = leading_monomial(gen.expected)
        if key in seen:
            return truth("p-center-distinct", {"count": len(generators)}, False, f"{gen.label} and {seen[key]} share a leading term")
        seen[key] = gen.label
    return truth("p-center-distinct", {"count": len(generators)}, True)


def gr_image_set(ctx: AlgebraContext, mu: Composition, budget: int) -> List[List]:
    """Serialized gr images of the unshifted p-center generators for mu, without building them."""
    cctx = current_context(ctx.n, ctx.p)
    images = []
    for r in range(1, budget // ctx.p + 1):
        for a in range(1, mu.m + 1):
            for i, j in itertools.product(range(1, mu.size(a) + 1), repeat=2):
                images.append(expected_b(cctx, mu, a, i, j, r).serialize())
        for a, b in itertools.permutations(range(1, mu.m + 1), 2):
            for i, j in itertools.product(range(1, mu.size(a) + 1), range(1, mu.size(b) + 1)):
                images.append(expected_root_power(cctx, mu, a, b, i, j, r).serialize())
    return sorted(images)


def second_proof_checks(ctx: AlgebraContext, order: int) -> List[CheckReport]:
    """t_11 and t_12 falling products against d_1 and e_1 from the decomposition for (1, ..., 1)."""
    if ctx.n < 2:
        return []
    alg = parabolic_algebra(ctx, Composition.ones(ctx.n), order)
    d1 = falling_product(alg.D_series(1, 1, 1), ctx.p)
    e1 = alg.E_series(1, 1, 1).power(ctx.p)
    return [
        compare("second-proof-diagonal", {}, s_series(ctx, 1, 1, order).series, d1),
        compare("second-proof-offdiagonal", {}, s_series(ctx, 1, 2, order).series, d1 * e1),
    ]


# --- suite bodies ---

def hc_center_checks(ctx: AlgebraContext, order: int, budget: int) -> List[CheckReport]:
    reports: List[CheckReport] = [verify_factorization(ctx, mu, order) for mu in compositions(ctx.n)]
    c = hc_series("c", ctx, order)
    for r in range(1, order + 1):
        reports.append(centrality_check("hc-central", {"r": r}, c.coeff(r), budget))
    bc = hc_series("bc", ctx, order)
    cctx = current_context(ctx.n, ctx.p)
    for r in range(1, order // ctx.p + 1):
        x = bc.coeff(r * ctx.p)
        reports.append(centrality_check("bc-central", {"r": r * ctx.p}, x, budget))
        reports.append(gr_leading_check("bc-gr", {"r": r * ctx.p}, x, expected_bc(cctx, r), r * ctx.p - ctx.p))
    return reports


def _vanishing(check_id: str, params: Params, series: TruncatedSeries, below: int) -> CheckReport:
    top = min(below - 1, series.order)
    nonzero = [r for r in range(1, top + 1) if not series.coeff(r).is_zero()]
    return truth(check_id, params, not nonzero, f"nonzero coefficients at {nonzero}")


def p_center_checks(alg: ParabolicAlgebra, data: ShiftData, budget: int, centrality_budget: int) -> List[CheckReport]:
    ctx, mu, p, order = alg.ctx, alg.mu, alg.ctx.p, alg.order
    reports: List[CheckReport] = []
    cctx = current_context(ctx.n, p)
    for a in range(1, mu.m + 1):
        for i, j in itertools.product(range(1, mu.size(a) + 1), repeat=2):
            series = b_series(alg, a, i, j).series
            params = {"a": a, "i": i, "j": j}
            reports.append(_vanishing("b-vanishing", params, series, p))
            if order > p:
                logger.info("B%s^(r) for p not dividing r: filtration degree only, no expression in the B^(sp)", params)
            for r in range(p + 1, order + 1):
                if r % p:
                    degree = series.coeff(r).loop_degree()
                    reports.append(truth("b-filtration", {**params, "r": r}, degree <= r - p - 1, f"loop degree {degree}"))
    for a, b in itertools.combinations(range(1, mu.m + 1), 2):
        for side, rows, cols in (("P", a, b), ("Q", b, a)):
            for i, j in itertools.product(range(1, mu.size(rows) + 1), range(1, mu.size(cols) + 1)):
                series = (p_series(alg, a, b, i, j) if side == "P" else q_series(alg, b, a, i, j)).series
                params = {"kind": side, "a": rows, "b": cols, "i": i, "j": j}
                reports.append(_vanishing("pq-vanishing", params, series, p))
                for r in range(p, order + 1):
                    x = series.coeff(r)
                    reports.append(centrality_check("pq-central", {**params, "r": r}, x, centrality_budget))
                    if r % p == 0:
                        expected = expected_root_power(cctx, mu, rows, cols, i, j, r // p)
                        reports.append(gr_leading_check("pq-gr", {**params, "r": r}, x, expected, r - p))
                    else:
                        degree = x.loop_degree()
                        reports.append(truth("pq-gr", {**params, "r": r}, degree < r - p, f"loop degree {degree}"))
    generators = p_center_generators(alg, data, budget)
    for gen in generators:
        params = {"label": gen.label}
        reports.append(centrality_check("p-central", params, gen.element, centrality_budget, alg, data))
        reports.append(gr_leading_check("p-center-gr", params, gen.element, gen.expected, gen.degree))
    if generators:
        reports.append(leading_terms_distinct(generators))
    if data.sigma.is_zero():
        ours = gr_image_set(ctx, mu, budget)
        finest = gr_image_set(ctx, Composition.ones(ctx.n), budget)
        reports.append(truth("p-center-gr-cross-mu", {"mu": list(mu.parts)}, ours == finest, "gr images differ from the (1,...,1) shape"))
        reports.extend(second_proof_checks(ctx, order))
        for i, j in itertools.product(range(1, ctx.n + 1), repeat=2):
            s = s_series(ctx, i, j, order).series
            reports.append(_vanishing("s-vanishing", {"i": i, "j": j}, s, p))
            for r in range(1, order // p + 1):
                reports.append(centrality_check("s-central", {"i": i, "j": j, "r": r * p}, s.coeff(r * p), centrality_budget))
        for k in range(1, ctx.n + 1):
            bk = drinfeld_b_series(ctx, k, order).series
            for r in range(1, order // p + 1):
                reports.append(centrality_check("drinfeld-b-central", {"k": k, "r": r * p}, bk.coeff(r * p), centrality_budget))
    return reports


