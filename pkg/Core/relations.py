# Core/relations.py
"""
The relations of the parabolic presentation, checked coefficient by
coefficient in the concrete algebra Y_n, plus a few coefficient identities
derived from them.

Each relation knows how to enumerate its admissible index instances for a
composition, how to evaluate both sides, and which E/F generators its left
hand side names (for the shifted-Yangian filter).
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from Core.checks import Params, guarded, skipped
from Core.errors import MalformedInputError
from Core.parabolic import ParabolicAlgebra, block_pairs
from Core.pbw_engine import Element, commutator
from Core.schemas import CheckReport
from Core.shapes import Composition, ShiftData
from Security.secure_audit_logs.logger import log_event

logger = logging.getLogger(__name__)

Sides = Tuple[Element, Element]
Named = List[Tuple[str, int, int]]


def _d_pairs(mu: Composition, a: int) -> List[Tuple[int, int]]:
    return block_pairs(mu, a, a)


def _e_pairs(mu: Composition, a: int) -> List[Tuple[int, int]]:
    return block_pairs(mu, a, a + 1)


def _f_pairs(mu: Composition, a: int) -> List[Tuple[int, int]]:
    return block_pairs(mu, a + 1, a)


def _delta(x: int, y: int) -> int:
    return int(x == y)


def _ad_power(x: Element, y: Element, times: int) -> Element:
    for _ in range(times):
        y = commutator(x, y)
    return y


@dataclass(frozen=True)
class Relation:
    id: str
    instances: Callable[[Composition, int], Iterator[Params]]
    sides: Callable[[ParabolicAlgebra, Params], Sides]
    named: Callable[[Params], Named] = lambda x: []


# --- (pr1) - (pr14) ---

def _pr1_instances(mu: Composition, budget: int) -> Iterator[Params]:
    for a in range(1, mu.m + 1):
        for i, j in _d_pairs(mu, a):
            yield {"a": a, "i": i, "j": j}


def _pr1(alg: ParabolicAlgebra, x: Params) -> Sides:
    return alg.D(x["a"], x["i"], x["j"], 0), alg.ctx.scalar(_delta(x["i"], x["j"]))


def _pr2_instances(mu: Composition, budget: int) -> Iterator[Params]:
    for a in range(1, mu.m + 1):
        for (i, j), r in itertools.product(_d_pairs(mu, a), range(budget + 1)):
            yield {"a": a, "i": i, "j": j, "r": r}


def _pr2(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, i, j, r = x["a"], x["i"], x["j"], x["r"]
    lhs = alg.ctx.zero()
    for t in range(r + 1):
        for alpha in range(1, alg.mu.size(a) + 1):
            lhs = lhs + alg.D(a, i, alpha, t) * alg.Dp(a, alpha, j, r - t)
    return lhs, alg.ctx.scalar(_delta(r, 0) * _delta(i, j))


def _pr3_instances(mu: Composition, budget: int) -> Iterator[Params]:
    for a, b in itertools.product(range(1, mu.m + 1), repeat=2):
        for (i, j), (k, l) in itertools.product(_d_pairs(mu, a), _d_pairs(mu, b)):
            for r, s in itertools.product(range(1, budget + 1), repeat=2):
                yield {"a": a, "b": b, "i": i, "j": j, "k": k, "l": l, "r": r, "s": s}


def _pr3(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, b, i, j, k, l, r, s = (x[key] for key in "abijklrs")
    lhs = commutator(alg.D(a, i, j, r), alg.D(b, k, l, s))
    rhs = alg.ctx.zero()
    if a == b:
        for t in range(min(r, s)):
            top = r + s - 1 - t
            rhs = rhs + alg.D(a, i, l, top) * alg.D(a, k, j, t) - alg.D(a, i, l, t) * alg.D(a, k, j, top)
    return lhs, rhs


def _pr4_instances(mu: Composition, budget: int) -> Iterator[Params]:
    for a, b in itertools.product(range(1, mu.m), repeat=2):
        for (i, j), (k, l) in itertools.product(_e_pairs(mu, a), _f_pairs(mu, b)):
            for r, s in itertools.product(range(1, budget + 1), repeat=2):
                yield {"a": a, "b": b, "i": i, "j": j, "k": k, "l": l, "r": r, "s": s}


def _pr4(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, b, i, j, k, l, r, s = (x[key] for key in "abijklrs")
    lhs = commutator(alg.E(a, i, j, r), alg.F(b, k, l, s))
    rhs = alg.ctx.zero()
    if a == b:
        for t in range(r + s):
            rhs = rhs - alg.Dp(a, i, l, t) * alg.D(a + 1, k, j, r + s - 1 - t)
    return lhs, rhs


def _pr5_instances(mu: Composition, budget: int) -> Iterator[Params]:
    for a, b in itertools.product(range(1, mu.m + 1), range(1, mu.m)):
        for (i, j), (k, l) in itertools.product(_d_pairs(mu, a), _e_pairs(mu, b)):
            for r, s in itertools.product(range(1, budget + 1), repeat=2):
                yield {"a": a, "b": b, "i": i, "j": j, "k": k, "l": l, "r": r, "s": s}


def _pr5(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, b, i, j, k, l, r, s = (x[key] for key in "abijklrs")
    lhs = commutator(alg.D(a, i, j, r), alg.E(b, k, l, s))
    rhs = alg.ctx.zero()
    for t in range(r):
        top = r + s - 1 - t
        if a == b and k == j:
            for alpha in range(1, alg.mu.size(a) + 1):
                rhs = rhs + alg.D(a, i, alpha, t) * alg.E(a, alpha, l, top)
        if a == b + 1:
            rhs = rhs - alg.D(b + 1, i, l, t) * alg.E(b, k, j, top)
    return lhs, rhs


def _pr6_instances(mu: Composition, budget: int) -> Iterator[Params]:
    for a, b in itertools.product(range(1, mu.m + 1), range(1, mu.m)):
        for (i, j), (k, l) in itertools.product(_d_pairs(mu, a), _f_pairs(mu, b)):
            for r, s in itertools.product(range(1, budget + 1), repeat=2):
                yield {"a": a, "b": b, "i": i, "j": j, "k": k, "l": l, "r": r, "s": s}


def _pr6(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, b, i, j, k, l, r, s = (x[key] for key in "abijklrs")
    lhs = commutator(alg.D(a, i, j, r), alg.F(b, k, l, s))
    rhs = alg.ctx.zero()
    for t in range(r):
        top = r + s - 1 - t
        if a == b + 1:
            rhs = rhs + alg.F(b, i, l, top) * alg.D(b + 1, k, j, t)
        if a == b and i == l:
            for alpha in range(1, alg.mu.size(a) + 1):
                rhs = rhs - alg.F(a, k, alpha, top) * alg.D(a, alpha, j, t)
    return lhs, rhs


def _same_block_instances(pairs: Callable[[Composition, int], List[Tuple[int, int]]]):
    def instances(mu: Composition, budget: int) -> Iterator[Params]:
        for a in range(1, mu.m):
            for (i, j), (k, l) in itertools.product(pairs(mu, a), repeat=2):
                for r, s in itertools.product(range(1, budget + 1), repeat=2):
                    yield {"a": a, "i": i, "j": j, "k": k, "l": l, "r": r, "s": s}
    return instances


def _pr7(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, i, j, k, l, r, s = (x[key] for key in "aijklrs")
    lhs = commutator(alg.E(a, i, j, r), alg.E(a, k, l, s))
    rhs = alg.ctx.zero()
    for t in range(1, s):
        rhs = rhs + alg.E(a, i, l, t) * alg.E(a, k, j, r + s - 1 - t)
    for t in range(1, r):
        rhs = rhs - alg.E(a, i, l, t) * alg.E(a, k, j, r + s - 1 - t)
    return lhs, rhs


def _pr8(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, i, j, k, l, r, s = (x[key] for key in "aijklrs")
    lhs = commutator(alg.F(a, i, j, r), alg.F(a, k, l, s))
    rhs = alg.ctx.zero()
    for t in range(1, r):
        rhs = rhs + alg.F(a, i, l, r + s - 1 - t) * alg.F(a, k, j, t)
    for t in range(1, s):
        rhs = rhs - alg.F(a, i, l, r + s - 1 - t) * alg.F(a, k, j, t)
    return lhs, rhs


def _adjacent_instances(first, second):
    def instances(mu: Composition, budget: int) -> Iterator[Params]:
        for a in range(1, mu.m - 1):
            for (i, j), (k, l) in itertools.product(first(mu, a), second(mu, a + 1)):
                for r, s in itertools.product(range(1, budget), repeat=2):
                    yield {"a": a, "i": i, "j": j, "k": k, "l": l, "r": r, "s": s}
    return instances


def _pr9(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, i, j, k, l, r, s = (x[key] for key in "aijklrs")
    lhs = commutator(alg.E(a, i, j, r + 1), alg.E(a + 1, k, l, s)) - commutator(alg.E(a, i, j, r), alg.E(a + 1, k, l, s + 1))
    rhs = alg.ctx.zero()
    if k == j:
        for beta in range(1, alg.mu.size(a + 1) + 1):
            rhs = rhs + alg.E(a, i, beta, r) * alg.E(a + 1, beta, l, s)
    return lhs, rhs


def _pr10(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, i, j, k, l, r, s = (x[key] for key in "aijklrs")
    lhs = commutator(alg.F(a, i, j, r), alg.F(a + 1, k, l, s + 1)) - commutator(alg.F(a, i, j, r + 1), alg.F(a + 1, k, l, s))
    rhs = alg.ctx.zero()
    if i == l:
        for beta in range(1, alg.mu.size(a + 1) + 1):
            rhs = rhs + alg.F(a + 1, k, beta, s) * alg.F(a, beta, j, r)
    return lhs, rhs


def _pr11_instances(mu: Composition, budget: int) -> Iterator[Params]:
    for a, b in itertools.combinations(range(1, mu.m), 2):
        for (i, j), (k, l) in itertools.product(_e_pairs(mu, a), _e_pairs(mu, b)):
            if b == a + 1 and k == j:
                continue
            for r, s in itertools.product(range(1, budget + 1), repeat=2):
                yield {"a": a, "b": b, "i": i, "j": j, "k": k, "l": l, "r": r, "s": s}


def _pr11(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, b, i, j, k, l, r, s = (x[key] for key in "abijklrs")
    return commutator(alg.E(a, i, j, r), alg.E(b, k, l, s)), alg.ctx.zero()


def _pr12_instances(mu: Composition, budget: int) -> Iterator[Params]:
    for a, b in itertools.combinations(range(1, mu.m), 2):
        for (i, j), (k, l) in itertools.product(_f_pairs(mu, a), _f_pairs(mu, b)):
            if b == a + 1 and i == l:
                continue
            for r, s in itertools.product(range(1, budget + 1), repeat=2):
                yield {"a": a, "b": b, "i": i, "j": j, "k": k, "l": l, "r": r, "s": s}


def _pr12(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, b, i, j, k, l, r, s = (x[key] for key in "abijklrs")
    return commutator(alg.F(a, i, j, r), alg.F(b, k, l, s)), alg.ctx.zero()


def _serre_instances(pairs, diagonal: bool):
    def instances(mu: Composition, budget: int) -> Iterator[Params]:
        for a, b in itertools.product(range(1, mu.m), repeat=2):
            if abs(a - b) != 1:
                continue
            same = pairs(mu, a)
            for (i, j), (k, l), (f, g) in itertools.product(same, same, pairs(mu, b)):
                for t in range(1, budget + 1):
                    if diagonal:
                        for r in range(1, budget + 1):
                            yield {"a": a, "b": b, "i": i, "j": j, "k": k, "l": l, "f": f, "g": g, "r": r, "t": t}
                    else:
                        for r, s in itertools.combinations_with_replacement(range(1, budget + 1), 2):
                            yield {"a": a, "b": b, "i": i, "j": j, "k": k, "l": l, "f": f, "g": g, "r": r, "s": s, "t": t}
    return instances


def _pr13(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, b, i, j, k, l, f, g, r, s, t = (x[key] for key in "abijklfgrst")
    third = alg.E(b, f, g, t)
    lhs = commutator(alg.E(a, i, j, r), commutator(alg.E(a, k, l, s), third))
    lhs = lhs + commutator(alg.E(a, i, j, s), commutator(alg.E(a, k, l, r), third))
    return lhs, alg.ctx.zero()


def _pr14(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, b, i, j, k, l, f, g, r, s, t = (x[key] for key in "abijklfgrst")
    third = alg.F(b, f, g, t)
    lhs = commutator(alg.F(a, i, j, r), commutator(alg.F(a, k, l, s), third))
    lhs = lhs + commutator(alg.F(a, i, j, s), commutator(alg.F(a, k, l, r), third))
    return lhs, alg.ctx.zero()


# --- derived coefficient identities ---

def _serre_diagonal(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, b, i, j, k, l, f, g, r, t = (x[key] for key in "abijklfgrt")
    lhs = commutator(alg.E(a, i, j, r), commutator(alg.E(a, k, l, r), alg.E(b, f, g, t)))
    return lhs, alg.ctx.zero()


def _dd_commute_instances(mu: Composition, budget: int) -> Iterator[Params]:
    for a in range(1, mu.m + 1):
        for (i, j), (r, s) in itertools.product(_d_pairs(mu, a), itertools.combinations(range(1, budget + 1), 2)):
            yield {"a": a, "i": i, "j": j, "r": r, "s": s}


def _dd_commute(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, i, j, r, s = (x[key] for key in "aijrs")
    return commutator(alg.D(a, i, j, r), alg.D(a, i, j, s)), alg.ctx.zero()


def _ed1_prime_instances(mu: Composition, budget: int) -> Iterator[Params]:
    for a in range(1, mu.m):
        for (i, j), (k, l) in itertools.product(_e_pairs(mu, a), _d_pairs(mu, a)):
            for r, s in itertools.product(range(1, budget + 1), repeat=2):
                yield {"a": a, "i": i, "j": j, "k": k, "l": l, "r": r, "s": s}


def _ed1_prime(alg: ParabolicAlgebra, x: Params) -> Sides:
    a, i, j, k, l, r, s = (x[key] for key in "aijklrs")
    lhs = commutator(alg.E(a, i, j, r), alg.Dp(a, k, l, s))
    rhs = alg.ctx.zero()
    for t in range(s):
        rhs = rhs + alg.E(a, k, j, r + s - 1 - t) * alg.Dp(a, i, l, t)
    return lhs, rhs


def _ad_p_instances(target: str):
    def instances(mu: Composition, budget: int) -> Iterator[Params]:
        top = min(budget, 2)
        for a in range(1, mu.m):
            blocks = range(1, mu.m + 1) if target == "D" else range(1, mu.m)
            for b in blocks:
                pairs = {"E": _e_pairs, "D": _d_pairs, "F": _f_pairs}[target](mu, b)
                for (i, j), (k, l) in itertools.product(_e_pairs(mu, a), pairs):
                    for r, s in itertools.product(range(1, top + 1), repeat=2):
                        yield {"a": a, "b": b, "i": i, "j": j, "k": k, "l": l, "r": r, "s": s}
    return instances


def _ad_p(target: str):
    def sides(alg: ParabolicAlgebra, x: Params) -> Sides:
        a, b, i, j, k, l, r, s = (x[key] for key in "abijklrs")
        y = {"E": alg.E, "D": alg.D, "F": alg.F}[target](b, k, l, s)
        return _ad_power(alg.E(a, i, j, r), y, alg.ctx.p), alg.ctx.zero()
    return sides


def _named_rs(first: str, second: str, first_block: str = "a", second_block: str = "b") -> Callable[[Params], Named]:
    def named(x: Params) -> Named:
        out: Named = []
        if first:
            out.append((first, x[first_block], x["r"]))
        if second:
            out.append((second, x[second_block], x["s"]))
        return out
    return named


def _named_adjacent(family: str) -> Callable[[Params], Named]:
    def named(x: Params) -> Named:
        a, r, s = x["a"], x["r"], x["s"]
        return [(family, a, r), (family, a, r + 1), (family, a + 1, s), (family, a + 1, s + 1)]
    return named


def _named_serre(family: str, diagonal: bool) -> Callable[[Params], Named]:
    def named(x: Params) -> Named:
        s = x["r"] if diagonal else x["s"]
        return [(family, x["a"], x["r"]), (family, x["a"], s), (family, x["b"], x["t"])]
    return named


RELATIONS: Dict[str, Relation] = {
    rel.id: rel
    for rel in [
        Relation("pr1", _pr1_instances, _pr1),
        Relation("pr2", _pr2_instances, _pr2),
        Relation("pr3", _pr3_instances, _pr3),
        Relation("pr4", _pr4_instances, _pr4, _named_rs("E", "F")),
        Relation("pr5", _pr5_instances, _pr5, _named_rs("", "E")),
        Relation("pr6", _pr6_instances, _pr6, _named_rs("", "F")),
        Relation("pr7", _same_block_instances(_e_pairs), _pr7, _named_rs("E", "E", "a", "a")),
        Relation("pr8", _same_block_instances(_f_pairs), _pr8, _named_rs("F", "F", "a", "a")),
        Relation("pr9", _adjacent_instances(_e_pairs, _e_pairs), _pr9, _named_adjacent("E")),
        Relation("pr10", _adjacent_instances(_f_pairs, _f_pairs), _pr10, _named_adjacent("F")),
        Relation("pr11", _pr11_instances, _pr11, _named_rs("E", "E")),
        Relation("pr12", _pr12_instances, _pr12, _named_rs("F", "F")),
        Relation("pr13", _serre_instances(_e_pairs, False), _pr13, _named_serre("E", False)),
        Relation("pr14", _serre_instances(_f_pairs, False), _pr14, _named_serre("F", False)),
        Relation("serre-diagonal", _serre_instances(_e_pairs, True), _serre_diagonal, _named_serre("E", True)),
        Relation("dd-commute", _dd_commute_instances, _dd_commute),
        Relation("ed1-prime-coeff", _ed1_prime_instances, _ed1_prime, _named_rs("E", "", "a")),
        Relation("ad-p-e-coeff", _ad_p_instances("E"), _ad_p("E"), _named_rs("E", "E")),
        Relation("ad-p-d-coeff", _ad_p_instances("D"), _ad_p("D"), _named_rs("E", "")),
        Relation("ad-p-f-coeff", _ad_p_instances("F"), _ad_p("F"), _named_rs("E", "F")),
    ]
}

PRESENTATION_IDS: Tuple[str, ...] = tuple(f"pr{k}" for k in range(1, 15))


def _relation(rel_id: str) -> Relation:
    try:
        return RELATIONS[rel_id]
    except KeyError:
        raise MalformedInputError(f"unknown relation {rel_id!r}; known: {', '.join(RELATIONS)}") from None


def enumerate_instances(rel_id: str, mu: Composition, budget: int) -> List[Params]:
    return list(_relation(rel_id).instances(mu, budget))


def required_order(budget: int) -> int:
    """Truncation order reaching every coefficient named at this budget; (pr3) - (pr8) go up to r + s - 1."""
    return max(2 * budget - 1, 1)


def below_shift_bound(named: Named, data: ShiftData) -> List[str]:
    """Named E_a / F_a generators whose superscript does not exceed the shift bound."""
    out = []
    for family, a, r in named:
        bound = data.s_mu(a, a + 1) if family == "E" else data.s_mu(a + 1, a)
        if r <= bound:
            out.append(f"{family}{a}^({r})<= {bound}")
    return out


def verify_relation(rel_id: str, instance: Params, alg: ParabolicAlgebra, data: ShiftData | None = None) -> CheckReport:
    """pass iff lhs - rhs normalizes to zero; superscripts past the truncation order are skipped."""
    relation = _relation(rel_id)
    params = dict(instance)
    if data is not None and not data.sigma.is_zero():
        violations = below_shift_bound(relation.named(instance), data)
        if violations:
            log_event("Skipped boundary instance", {"relation": rel_id, "instance": params, "below": violations})
            return skipped(rel_id, params, "shift bound: " + ", ".join(violations))
    return guarded(rel_id, params, lambda: relation.sides(alg, instance))


def verify_relations(
    rel_ids: Sequence[str],
    alg: ParabolicAlgebra,
    budget: int,
    data: ShiftData | None = None,
) -> List[CheckReport]:
    reports: List[CheckReport] = []
    for rel_id in rel_ids:
        instances = enumerate_instances(rel_id, alg.mu, budget)
        logger.info("relation %s: %s instances for mu=%s", rel_id, len(instances), alg.mu)
        reports.extend(verify_relation(rel_id, x, alg, data) for x in instances)
    return reports
