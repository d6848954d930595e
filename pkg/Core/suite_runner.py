# Core/suite_runner.py
"""
Runs the named check suites for one RunConfig and aggregates the results
into a SuiteReport. Suites are independent; with workers > 1 they run in a
process pool and are merged in a fixed order.
"""
from __future__ import annotations

import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, List, Sequence, Tuple

from Core.center import gr_leading_check, hc_center_checks, p_center_budget, p_center_checks
from Core.checks import compare, guarded, skipped, truth
from Core.current_algebra import (
    CurrentBasisElement,
    basis_element,
    central_in_shifted,
    current_bracket,
    current_center_generators,
    current_context,
)
from Core.errors import BudgetError
from Core.gauss import gauss_decompose, quasideterminant, split_block_check
from Core.maps import MAP_PROPERTIES, verify_map_property
from Core.parabolic import clear_root_cache, higher_root, parabolic_algebra
from Core.pbw_engine import (
    AlgebraContext,
    clear_straightening_cache,
    commutator,
    expand_naive,
    normalize,
    pbw_span_rank,
    random_element,
)
from Core.relations import RELATIONS, required_order, verify_relations
from Core.run_trace import RunTrace
from Core.schemas import SUITES, CheckReport, RunConfig, SuiteReport
from Core.series_identities import SERIES_IDENTITIES, coefficient_order, verify_series_identities
from Core.series_ring import SeriesMatrix
from Core.shapes import Composition, ShiftData, compositions, parse_sigma
from Security.secure_audit_logs.logger import log_event

logger = logging.getLogger(__name__)

DEFAULT_BUDGETS: Dict[str, int] = {
    "bivariate_order": 6,
    "ad_p_order": 4,
    "centrality": 3,
    "gauss_order": 6,
    "map_order": 4,
    "fuzz_cases": 1000,
    "fuzz_weight": 6,
    "pbw_length": 3,
    "pbw_degree": 4,
}


def build_inputs(config: RunConfig) -> Tuple[AlgebraContext, ShiftData]:
    ctx = AlgebraContext(config.n, config.p)
    mu = Composition(tuple(config.mu))
    return ctx, ShiftData(parse_sigma(config.sigma, config.n), mu)


def _budget(config: RunConfig, key: str) -> int:
    return config.budget_for(key, DEFAULT_BUDGETS[key])


# --- suites ---

def _relations(config: RunConfig) -> List[CheckReport]:
    ctx, data = build_inputs(config)
    alg = parabolic_algebra(ctx, data.mu, max(config.trunc, required_order(config.budget)))
    return verify_relations(list(RELATIONS), alg, config.budget, data)


def _series_identities(config: RunConfig) -> List[CheckReport]:
    ctx, data = build_inputs(config)
    order = _budget(config, "bivariate_order")
    alg = parabolic_algebra(ctx, data.mu, max(config.trunc, order, coefficient_order(config.budget)))
    return verify_series_identities(list(SERIES_IDENTITIES), alg, order, config.ell, config.budget, _budget(config, "ad_p_order"))


def _gauss(config: RunConfig) -> List[CheckReport]:
    ctx = AlgebraContext(config.n, config.p)
    order = _budget(config, "gauss_order")
    T = SeriesMatrix.rtt(ctx, order)
    reports: List[CheckReport] = []
    for mu in compositions(ctx.n):
        shape = {"mu": list(mu.parts)}
        factors = gauss_decompose(T, mu)
        reports.append(compare("gauss-reassemble", shape, factors.reassemble(), T))
        for a in range(1, mu.m + 1):
            reports.append(compare("gauss-quasideterminant", {**shape, "family": "D", "a": a}, quasideterminant(T, mu, a), factors.d(a)))
            for b in range(a + 1, mu.m + 1):
                reports.append(compare("gauss-quasideterminant", {**shape, "family": "E", "a": a, "b": b},
                                       quasideterminant(T, mu, a, "E", b), factors.e(a, b)))
                reports.append(compare("gauss-quasideterminant", {**shape, "family": "F", "a": a, "b": b},
                                       quasideterminant(T, mu, a, "F", b), factors.f(b, a)))
        for b in range(1, mu.m + 1):
            if mu.size(b) > 1:
                for key, ok in split_block_check(T, mu, b, 1).items():
                    reports.append(truth("gauss-split-block", {**shape, "b": b, "x": 1, "identity": key}, ok))
                break
    return reports


def _hc_center(config: RunConfig) -> List[CheckReport]:
    ctx = AlgebraContext(config.n, config.p)
    return hc_center_checks(ctx, config.trunc, _budget(config, "centrality"))


def _p_center(config: RunConfig) -> List[CheckReport]:
    ctx, data = build_inputs(config)
    budget = p_center_budget(data, config.p, config.budget_for("p_center", config.budget))
    alg = parabolic_algebra(ctx, data.mu, max(config.trunc, budget))
    return p_center_checks(alg, data, budget, _budget(config, "centrality"))


def _maps(config: RunConfig) -> List[CheckReport]:
    ctx, data = build_inputs(config)
    order = _budget(config, "map_order")
    reports: List[CheckReport] = []
    for prop_id in MAP_PROPERTIES:
        reports.extend(verify_map_property(prop_id, ctx, order, mu=data.mu, data=data, seed=config.seed))
    return reports


def _gr(config: RunConfig) -> List[CheckReport]:
    """PBW rank, the chi bracket on generator pairs, engine fuzz and the current-algebra center."""
    ctx, data = build_inputs(config)
    reports: List[CheckReport] = []
    degree, length = _budget(config, "pbw_degree"), _budget(config, "pbw_length")
    rank, expected = pbw_span_rank(AlgebraContext(2, config.p), degree, length)
    reports.append(truth("pbw-rank", {"n": 2, "degree": degree, "length": length}, rank == expected, f"rank {rank}, expected {expected}"))

    cctx = current_context(ctx.n, ctx.p)
    top = min(config.budget, 3)
    letters = [(i, j, r) for r in range(1, top + 1) for i in range(1, ctx.n + 1) for j in range(1, ctx.n + 1)]
    finest = Composition.ones(ctx.n)
    for (i, j, r), (k, l, s) in itertools.product(letters, repeat=2):
        bracket = commutator(ctx.gen(i, j, r), ctx.gen(k, l, s))
        expected_bracket = current_bracket(
            cctx, CurrentBasisElement(i, j, 1, 1, r - 1), CurrentBasisElement(k, l, 1, 1, s - 1), finest,
        )
        params = {"x": [i, j, r], "y": [k, l, s]}
        reports.append(gr_leading_check("chi-bracket", params, bracket, expected_bracket, r + s - 2))

    rng = random.Random(config.seed)
    weight = _budget(config, "fuzz_weight")
    failures = 0
    cases = _budget(config, "fuzz_cases")
    for _ in range(cases):
        x, y, z = (random_element(ctx, rng, max_weight=weight) for _ in range(3))
        if (x * y) * z != x * (y * z):
            failures += 1
    reports.append(truth("associativity-fuzz", {"cases": cases, "seed": config.seed}, failures == 0, f"{failures} failing triples"))
    for case in range(min(cases, 50)):
        word = [g for m, _ in random_element(ctx, rng, max_weight=weight, max_terms=1).items() for g in reversed(m)]
        reports.append(compare("naive-straightening", {"case": case}, expand_naive(ctx, word), normalize(word, 1, ctx)))

    for label, element in current_center_generators(data, ctx.p, config.budget):
        outside = central_in_shifted(element, data, config.budget)
        reports.append(truth("current-center", {"label": label}, not outside, f"fails against {[str(g) for g in outside[:3]]}"))
    return reports


def _recursion(config: RunConfig) -> List[CheckReport]:
    """Witness independence of the shifted higher roots, agreement with the Gauss blocks, and their gr images."""
    ctx, data = build_inputs(config)
    mu = data.mu
    alg = parabolic_algebra(ctx, mu, max(config.trunc, config.budget + 1))
    cctx = current_context(ctx.n, ctx.p)
    reports: List[CheckReport] = []
    for a, b in itertools.combinations(range(1, mu.m + 1), 2):
        for side in ("E", "F"):
            rows, cols = (a, b) if side == "E" else (b, a)
            bound = data.s_mu(rows, cols)
            for i, j in itertools.product(range(1, mu.size(rows) + 1), range(1, mu.size(cols) + 1)):
                for r in range(bound + 1, config.budget + 1):
                    params = {"side": side, "a": a, "b": b, "i": i, "j": j, "r": r}
                    try:
                        first = higher_root(alg, side, a, b, i, j, r, 1, data)
                    except BudgetError as exc:
                        reports.append(skipped("root-witness", params, f"budget: {exc}"))
                        continue
                    if b > a + 1:
                        for k in range(2, mu.size(b - 1) + 1):
                            reports.append(compare("root-witness", {**params, "k": k}, higher_root(alg, side, a, b, i, j, r, k, data), first))
                    if data.sigma.is_zero():
                        reports.append(guarded("root-gauss", params, lambda: (first, alg.series(side, rows, cols, i, j).coeff(r))))
                    expected = basis_element(cctx, CurrentBasisElement(rows, cols, i, j, r - 1), mu)
                    reports.append(gr_leading_check("root-gr", params, first, expected, r - 1))
    return reports


SUITE_RUNNERS: Dict[str, Callable[[RunConfig], List[CheckReport]]] = {
    "relations": _relations,
    "series-identities": _series_identities,
    "gauss": _gauss,
    "hc-center": _hc_center,
    "p-center": _p_center,
    "maps": _maps,
    "gr": _gr,
    "recursion": _recursion,
}


def selected_suites(config: RunConfig) -> List[str]:
    return list(SUITES) if config.suite == "all" else [config.suite]


# --- acceptance matrix ---

Cell = Dict[str, Any]
SHIFTED_PAIR = "0,1;0,0"


def _cell(n: int, p: int, mu: Sequence[int], sigma: str = "zero") -> Cell:
    return {"n": n, "p": p, "mu": list(mu), "sigma": sigma}


def _shape_grid(ns: Sequence[int], ps: Sequence[int], shifted: bool = False) -> List[Cell]:
    """Every composition of every n, zero shift; plus sigma = [[0,1],[0,0]] on (1,1) when ``shifted``."""
    cells = [_cell(n, p, mu.parts) for n in ns for p in ps for mu in compositions(n)]
    if shifted:
        cells.extend(_cell(2, p, (1, 1), SHIFTED_PAIR) for p in ps)
    return cells


ACCEPTANCE_GRIDS: Dict[str, Callable[[RunConfig], List[Cell]]] = {
    "relations": lambda config: _shape_grid((2, 3), (3, 5), shifted=True),
    "series-identities": lambda config: _shape_grid((1, 2, 3), (3, 5)),
    # the gauss suite walks the compositions itself
    "gauss": lambda config: [_cell(n, config.p, [1] * n) for n in (1, 2, 3, 4)],
    "hc-center": lambda config: [_cell(n, p, [1] * n) for n in (1, 2, 3) for p in (3, 5)],
    "p-center": lambda config: _shape_grid((1, 2), (3,), shifted=True),
    "maps": lambda config: _shape_grid((2, 3), (config.p,), shifted=True),
    "gr": lambda config: [_cell(2, p, (1, 1)) for p in (3, 5)],
    "recursion": lambda config: _shape_grid((3,), (config.p,)),
}


def acceptance_cells(name: str, config: RunConfig) -> List[Cell]:
    return ACCEPTANCE_GRIDS[name](config)


def cell_config(config: RunConfig, cell: Cell) -> RunConfig:
    return RunConfig.model_validate({**config.model_dump(), **cell, "matrix": False})


def cell_label(cell: Cell) -> str:
    return f"n={cell['n']} p={cell['p']} mu={','.join(map(str, cell['mu']))} sigma={cell['sigma']}"


# --- memo tables ---

_cache_owner: Tuple[int, int] | None = None


def release_caches() -> None:
    """Drop the memoised straightening, higher-root and parabolic tables."""
    clear_straightening_cache()
    clear_root_cache()
    parabolic_algebra.cache_clear()


def _enter_context(n: int, p: int) -> None:
    global _cache_owner
    if _cache_owner is not None and _cache_owner != (n, p):
        logger.debug("switching from n, p = %s to %s; releasing caches", _cache_owner, (n, p))
        release_caches()
    _cache_owner = (n, p)


def _run_cell(name: str, config: RunConfig) -> List[CheckReport]:
    _enter_context(config.n, config.p)
    return SUITE_RUNNERS[name](config)


def run_suite(name: str, config: RunConfig) -> List[CheckReport]:
    start = time.perf_counter()
    log_event("Suite started", {"suite": name, "n": config.n, "p": config.p, "mu": config.mu, "matrix": config.matrix})
    if config.matrix:
        reports: List[CheckReport] = []
        for cell in acceptance_cells(name, config):
            label = cell_label(cell)
            cell_reports = _run_cell(name, cell_config(config, cell))
            logger.info("suite %s, cell %s: %s checks", name, label, len(cell_reports))
            reports.extend(r.model_copy(update={"params": {**r.params, "cell": label}}) for r in cell_reports)
    else:
        reports = _run_cell(name, config)
    failed = sum(1 for r in reports if r.status == "fail")
    log_event("Suite finished", {
        "suite": name, "checks": len(reports), "fail": failed,
        "seconds": round(time.perf_counter() - start, 3),
    }, level=logging.WARNING if failed else logging.INFO)
    return reports


class SuiteRunner:
    def __init__(self, config: RunConfig) -> None:
        self.config = config
        self.trace = RunTrace()
        self.elapsed = 0.0

    def run(self, suites: Sequence[str] | None = None) -> SuiteReport:
        self.trace = RunTrace()
        names = list(suites) if suites is not None else selected_suites(self.config)
        build_inputs(self.config)
        self.trace.add_step("config", "Validated configuration", metadata=self.config.echo())
        start = time.perf_counter()
        results: Dict[str, List[CheckReport]] = {}
        if self.config.workers > 1 and len(names) > 1:
            with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
                futures = {name: pool.submit(run_suite, name, self.config) for name in names}
                for name in names:
                    results[name] = futures[name].result()
        else:
            for name in names:
                results[name] = run_suite(name, self.config)
        checks: List[CheckReport] = []
        for name in names:
            checks.extend(results[name])
            counts = {s: sum(1 for c in results[name] if c.status == s) for s in ("pass", "fail", "skipped")}
            self.trace.add_step(name, f"{len(results[name])} checks", metadata=counts)
        self.elapsed = time.perf_counter() - start
        report = SuiteReport(config=self.config.echo(), checks=checks).finalize()
        self.trace.add_step("summary", "Report assembled", metadata=report.summary.model_dump(by_alias=True))
        return report
