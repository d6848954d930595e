# Core/maps.py
"""
(Anti)automorphisms and embeddings of Yangians as finite generator-image
tables: omega_n, phi_k, the shift map psi_k, the transpose tau and the
permutation automorphisms w, plus the change-of-shift map iota acting on
parabolic labels. ``verify_map_property`` runs the property catalog.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Sequence, Tuple

from sympy.combinatorics import Permutation

from Core.center import b_series, s_series
from Core.checks import Params, compare, skipped, truth
from Core.errors import BudgetError, MalformedInputError, MapPreconditionError, MissingImageError
from Core.parabolic import ParabolicAlgebra, ParabolicIndex, parabolic_algebra, shifted_generator_set
from Core.pbw_engine import AlgebraContext, Element, Generator, apply_generator_map, commutator, random_element
from Core.schemas import CheckReport
from Core.series_ring import SeriesMatrix, TruncatedSeries
from Core.shapes import Composition, ShiftData, ShiftMatrix, compositions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorImageTable:
    """t_{i,j}^{(r)} -> Element for r <= order, extended (anti)multiplicatively."""

    name: str
    source: AlgebraContext
    target: AlgebraContext
    order: int
    images: Mapping[Generator, Element] = field(hash=False, compare=False)
    anti: bool = False

    def image(self, i: int, j: int, r: int) -> Element:
        try:
            return self.images[Generator(r, i, j)]
        except KeyError as exc:
            raise MissingImageError(f"{self.name} has no image for t_{i},{j}^({r}) (order {self.order})") from exc

    def __call__(self, x: Element) -> Element:
        if x.ctx != self.source:
            raise MalformedInputError(f"{self.name} acts on {self.source}, got an element of {x.ctx}")
        for m, _ in x.items():
            for g in m:
                if g.r > self.order:
                    raise BudgetError(g.r, self.order, f"{self.name} image")
        return apply_generator_map(x, self.images, self.anti, self.target)

    def on_series(self, f: TruncatedSeries) -> TruncatedSeries:
        if f.order > self.order:
            raise BudgetError(f.order, self.order, f"{self.name} image")
        return TruncatedSeries(self.target, [self(c) for c in f.coeffs])

    def after(self, inner: "GeneratorImageTable") -> "GeneratorImageTable":
        """self o inner."""
        if inner.target != self.source:
            raise MalformedInputError(f"cannot compose {self.name} after {inner.name}")
        order = min(self.order, inner.order)
        images = {g: self(x) for g, x in inner.images.items() if g.r <= order}
        return GeneratorImageTable(f"{self.name}*{inner.name}", inner.source, self.target, order, images, self.anti != inner.anti)

    def is_identity(self) -> bool:
        return self.source == self.target and all(x == self.source.gen(g.i, g.j, g.r) for g, x in self.images.items())

    def first_mismatch(self, other: "GeneratorImageTable") -> Generator | None:
        for g in sorted(self.images):
            if g in other.images and self.images[g] != other.images[g]:
                return g
        return None


def _letters(n: int, order: int) -> List[Generator]:
    return [Generator(r, i, j) for r in range(1, order + 1) for i in range(1, n + 1) for j in range(1, n + 1)]


def identity_images(ctx: AlgebraContext, order: int) -> GeneratorImageTable:
    images = {g: ctx.gen(g.i, g.j, g.r) for g in _letters(ctx.n, order)}
    return GeneratorImageTable("id", ctx, ctx, order, images)


def omega_images(ctx: AlgebraContext, order: int) -> GeneratorImageTable:
    """omega_n: T(u) -> T(-u)^{-1}."""
    inverse = SeriesMatrix.rtt(ctx, order).sign_twist().inverse()
    images = {g: inverse.at(g.i, g.j).coeff(g.r) for g in _letters(ctx.n, order)}
    return GeneratorImageTable(f"omega{ctx.n}", ctx, ctx, order, images)


def phi_images(k: int, ctx: AlgebraContext, order: int) -> GeneratorImageTable:
    """phi_k: Y_n -> Y_{k+n}, t_{i,j}^{(r)} -> t_{k+i,k+j}^{(r)}."""
    if k < 0:
        raise MalformedInputError(f"shift k must be nonnegative, got {k}")
    target = AlgebraContext(ctx.n + k, ctx.p)
    images = {g: target.gen(g.i + k, g.j + k, g.r) for g in _letters(ctx.n, order)}
    return GeneratorImageTable(f"phi{k}", ctx, target, order, images)


def shift_map_psi(k: int, ctx: AlgebraContext, order: int) -> GeneratorImageTable:
    """psi_k = omega_{k+n} o phi_k o omega_n."""
    phi = phi_images(k, ctx, order)
    table = omega_images(phi.target, order).after(phi.after(omega_images(ctx, order)))
    return GeneratorImageTable(f"psi{k}", table.source, table.target, table.order, table.images)


def tau_images(ctx: AlgebraContext, order: int) -> GeneratorImageTable:
    """tau: t_{i,j}^{(r)} -> t_{j,i}^{(r)}, an antiautomorphism."""
    images = {g: ctx.gen(g.j, g.i, g.r) for g in _letters(ctx.n, order)}
    return GeneratorImageTable("tau", ctx, ctx, order, images, anti=True)


def permutation_images(w: Sequence[int], ctx: AlgebraContext, order: int) -> GeneratorImageTable:
    """w given in one-line notation on 1..n: t_{i,j}^{(r)} -> t_{w(i),w(j)}^{(r)}."""
    if sorted(w) != list(range(1, ctx.n + 1)):
        raise MalformedInputError(f"{list(w)} is not a permutation of 1..{ctx.n}")
    images = {g: ctx.gen(w[g.i - 1], w[g.j - 1], g.r) for g in _letters(ctx.n, order)}
    return GeneratorImageTable(f"w{''.join(map(str, w))}", ctx, ctx, order, images)


def transposition(n: int, x: int, y: int) -> List[int]:
    """(x y) in one-line notation; x == y gives the identity."""
    if x == y:
        return list(range(1, n + 1))
    return [k + 1 for k in Permutation(x - 1, y - 1, size=n).array_form]


# --- change of shift matrix ---

def check_iota(source: ShiftData, target: ShiftData) -> None:
    if source.mu != target.mu:
        raise MapPreconditionError(f"shapes differ: {source.mu} vs {target.mu}")
    sigma, dot = source.sigma, target.sigma
    for i in range(1, sigma.n):
        if sigma.s(i, i + 1) + sigma.s(i + 1, i) != dot.s(i, i + 1) + dot.s(i + 1, i):
            raise MapPreconditionError(f"s_{i},{i + 1} + s_{i + 1},{i} differs between the shift matrices")


def iota_label(idx: ParabolicIndex, source: ShiftData, target: ShiftData) -> ParabolicIndex:
    """Regrade E and F superscripts by the change of shift; D is fixed."""
    check_iota(source, target)
    if idx.family in ("D", "D'"):
        return idx
    r = idx.r - source.s_mu(idx.a, idx.b) + target.s_mu(idx.a, idx.b)
    if r <= target.s_mu(idx.a, idx.b):
        raise MapPreconditionError(f"{idx.label()} is not a generator of the source shifted Yangian")
    return idx.with_r(r)


def lower_transfer(sigma: ShiftMatrix) -> ShiftMatrix:
    """The lower triangular shift matrix with the same s_{i,i+1} + s_{i+1,i}."""
    n = sigma.n
    rows = [[0] * n for _ in range(n)]
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        if i > j:
            rows[i - 1][j - 1] = sum(sigma.s(k, k + 1) + sigma.s(k + 1, k) for k in range(j, i))
    return ShiftMatrix(tuple(tuple(row) for row in rows))


def apply_symmetry(kind: str, x: Element | ParabolicIndex, **kwargs) -> Element | ParabolicIndex:
    if kind == "iota":
        if not isinstance(x, ParabolicIndex):
            raise MalformedInputError("iota acts on parabolic labels, not on RTT elements")
        return iota_label(x, kwargs["source"], kwargs["target"])
    if not isinstance(x, Element):
        raise MalformedInputError(f"{kind} acts on elements")
    order = max((g.r for m, _ in x.items() for g in m), default=1)
    if kind == "tau":
        return tau_images(x.ctx, order)(x)
    if kind == "permutation":
        return permutation_images(kwargs["w"], x.ctx, order)(x)
    raise MalformedInputError(f"unknown symmetry {kind!r}")


# --- property catalog ---

def _table_equal(check_id: str, params: Params, table: GeneratorImageTable, expected: GeneratorImageTable) -> CheckReport:
    miss = table.first_mismatch(expected)
    if miss is None:
        return truth(check_id, params, True)
    return CheckReport(
        id=check_id, params=params, status="fail",
        witness=[["letter", [miss.i, miss.j, miss.r]], (table.images[miss] - expected.images[miss]).serialize()],
    )


def _omega_involution(ctx: AlgebraContext, order: int, **_) -> List[CheckReport]:
    omega = omega_images(ctx, order)
    return [_table_equal("omega-involution", {"n": ctx.n}, omega.after(omega), identity_images(ctx, order))]


def _tau_involution(ctx: AlgebraContext, order: int, **_) -> List[CheckReport]:
    tau = tau_images(ctx, order)
    return [_table_equal("tau-involution", {"n": ctx.n}, tau.after(tau), identity_images(ctx, order))]


def _tau_anti(ctx: AlgebraContext, order: int, seed: int = 0, samples: int = 5, **_) -> List[CheckReport]:
    rng = random.Random(seed)
    tau = tau_images(ctx, order)
    reports = []
    for sample in range(samples):
        x = random_element(ctx, rng, max_weight=order)
        y = random_element(ctx, rng, max_weight=order)
        reports.append(compare("tau-anti", {"sample": sample}, tau(x * y), tau(y) * tau(x)))
    return reports


def _psi_identity(ctx: AlgebraContext, order: int, **_) -> List[CheckReport]:
    return [truth("psi-identity", {"n": ctx.n}, shift_map_psi(0, ctx, order).is_identity(), "psi_0 moves a generator")]


def _psi_drinfeld(ctx: AlgebraContext, order: int, **_) -> List[CheckReport]:
    """psi_k(d_l) = d_{k+l}, psi_k(e_l) = e_{k+l}, psi_k(f_l) = f_{k+l}."""
    n, reports = ctx.n, []
    target = parabolic_algebra(ctx, Composition.ones(n), order)
    for k in range(1, n):
        small = AlgebraContext(n - k, ctx.p)
        psi = shift_map_psi(k, small, order)
        source = parabolic_algebra(small, Composition.ones(n - k), order)
        for l in range(1, n - k + 1):
            reports.append(compare("psi-drinfeld", {"k": k, "kind": "d", "l": l},
                                   psi.on_series(source.D_series(l, 1, 1)), target.D_series(k + l, 1, 1)))
            if l < n - k:
                reports.append(compare("psi-drinfeld", {"k": k, "kind": "e", "l": l},
                                       psi.on_series(source.E_series(l, 1, 1)), target.E_series(k + l, 1, 1)))
                reports.append(compare("psi-drinfeld", {"k": k, "kind": "f", "l": l},
                                       psi.on_series(source.F_series(l, 1, 1)), target.F_series(k + l, 1, 1)))
    return reports


def _psi_block(ctx: AlgebraContext, order: int, mu: Composition | None = None, **_) -> List[CheckReport]:
    """Block a of mu is psi_{p_a} of block 1 of (mu_a, ..., mu_m)."""
    reports = []
    shapes = [mu] if mu is not None else list(compositions(ctx.n))
    for shape in shapes:
        alg = parabolic_algebra(ctx, shape, order)
        for a in range(2, shape.m + 1):
            k = shape.offset(a)
            tail = shape.tail(a)
            small = AlgebraContext(tail.n, ctx.p)
            psi = shift_map_psi(k, small, order)
            source = parabolic_algebra(small, tail, order)
            families = [("D", a, a)] + ([("E", a, a + 1), ("F", a + 1, a)] if a < shape.m else [])
            for family, x, y in families:
                rows, cols = shape.size(x), shape.size(y)
                for i, j in itertools.product(range(1, rows + 1), range(1, cols + 1)):
                    params = {"mu": list(shape.parts), "family": family, "a": a, "i": i, "j": j}
                    reports.append(compare("psi-block", params,
                                           psi.on_series(source.series(family, x - a + 1, y - a + 1, i, j)),
                                           alg.series(family, x, y, i, j)))
    return reports


def _psi_homomorphism(ctx: AlgebraContext, order: int, seed: int = 0, samples: int = 3, **_) -> List[CheckReport]:
    rng = random.Random(seed)
    reports = []
    for k in range(1, ctx.n):
        small = AlgebraContext(ctx.n - k, ctx.p)
        psi = shift_map_psi(k, small, order)
        for sample in range(samples):
            x = random_element(small, rng, max_weight=order)
            y = random_element(small, rng, max_weight=order)
            reports.append(compare("psi-homomorphism", {"k": k, "sample": sample}, psi(x * y), psi(x) * psi(y)))
    return reports


def _block_permutation(mu: Composition, a: int, targets: Sequence[int]) -> List[int]:
    """Permutation of 1..n moving the listed inner indices of block a to the front of the block."""
    rest = [i for i in range(1, mu.size(a) + 1) if i not in targets]
    w = list(range(1, mu.n + 1))
    for position, i in enumerate(list(targets) + rest, start=1):
        w[mu.global_index(a, i) - 1] = mu.global_index(a, position)
    return w


def _corner_reduction(ctx: AlgebraContext, order: int, mu: Composition | None = None, **_) -> List[CheckReport]:
    """Permutations bringing D_{a;i,j} to D_{a;1,1} or D_{a;1,2}, and E_{a,b;i,j}, F_{b,a;j,i} to the first root block."""
    mu = mu if mu is not None else Composition.ones(ctx.n)
    alg = parabolic_algebra(ctx, mu, order)
    reports = []
    for a in range(1, mu.m + 1):
        for i, j in itertools.product(range(1, mu.size(a) + 1), repeat=2):
            if i == j:
                w = transposition(ctx.n, mu.global_index(a, 1), mu.global_index(a, i))
                target = alg.D_series(a, 1, 1)
            else:
                w = _block_permutation(mu, a, [i, j])
                target = alg.D_series(a, 1, 2)
            params = {"family": "D", "a": a, "i": i, "j": j}
            image = permutation_images(w, ctx, order).on_series(alg.D_series(a, i, j))
            reports.append(compare("corner-reduction", params, image, target))
    for a, b in itertools.combinations(range(1, mu.m + 1), 2):
        for i, j in itertools.product(range(1, mu.size(a) + 1), range(1, mu.size(b) + 1)):
            table = permutation_images(transposition(ctx.n, mu.global_index(a + 1, 1), mu.global_index(b, j)), ctx, order)
            params = {"a": a, "b": b, "i": i, "j": j}
            reports.append(compare("corner-reduction", {**params, "family": "E"},
                                   table.on_series(alg.series("E", a, b, i, j)), alg.series("E", a, a + 1, i, 1)))
            reports.append(compare("corner-reduction", {**params, "family": "F"},
                                   table.on_series(alg.series("F", b, a, j, i)), alg.series("F", a + 1, a, 1, i)))
    return reports


def _psi_b(ctx: AlgebraContext, order: int, mu: Composition | None = None, **_) -> List[CheckReport]:
    """psi_{p_a}(B_c of (mu_a, ..., mu_m)) = B_{c+a-1} of mu."""
    mu = mu if mu is not None else Composition.ones(ctx.n)
    alg = parabolic_algebra(ctx, mu, order)
    reports = []
    for a in range(2, mu.m + 1):
        tail = mu.tail(a)
        small = AlgebraContext(tail.n, ctx.p)
        psi = shift_map_psi(mu.offset(a), small, order)
        source = parabolic_algebra(small, tail, order)
        for c in range(1, tail.m + 1):
            for i, j in itertools.product(range(1, tail.size(c) + 1), repeat=2):
                params = {"a": a, "c": c, "i": i, "j": j}
                reports.append(compare("psi-b", params, psi.on_series(b_series(source, c, i, j).series),
                                       b_series(alg, c + a - 1, i, j).series))
    return reports


def _permutation_s(ctx: AlgebraContext, order: int, **_) -> List[CheckReport]:
    """w(s_{i,j}(u)) = s_{w(i),w(j)}(u) for every w in S_n."""
    reports = []
    series = {(i, j): s_series(ctx, i, j, order).series for i, j in itertools.product(range(1, ctx.n + 1), repeat=2)}
    for w in itertools.permutations(range(1, ctx.n + 1)):
        if list(w) == list(range(1, ctx.n + 1)):
            continue
        table = permutation_images(w, ctx, order)
        for (i, j), s in series.items():
            params = {"w": list(w), "i": i, "j": j}
            reports.append(compare("permutation-s", params, table.on_series(s), series[(w[i - 1], w[j - 1])]))
    return reports


def _tau_ef(ctx: AlgebraContext, order: int, mu: Composition | None = None, **_) -> List[CheckReport]:
    """tau(E_{a,b;i,j}(u)) = F_{b,a;j,i}(u)."""
    mu = mu if mu is not None else Composition.ones(ctx.n)
    alg = parabolic_algebra(ctx, mu, order)
    tau = tau_images(ctx, order)
    reports = []
    for a, b in itertools.combinations(range(1, mu.m + 1), 2):
        for i, j in itertools.product(range(1, mu.size(a) + 1), range(1, mu.size(b) + 1)):
            reports.append(compare("tau-ef", {"a": a, "b": b, "i": i, "j": j},
                                   tau.on_series(alg.series("E", a, b, i, j)), alg.series("F", b, a, j, i)))
    return reports


def _iota_images(
    ctx: AlgebraContext, order: int, data: ShiftData | None
) -> Tuple[ShiftData, ShiftData, Dict[ParabolicIndex, ParabolicIndex], ParabolicAlgebra]:
    data = data if data is not None else ShiftData(ShiftMatrix.zero(ctx.n), Composition.ones(ctx.n))
    dot = ShiftData(lower_transfer(data.sigma), data.mu)
    forward = {idx: iota_label(idx, data, dot) for idx in shifted_generator_set(data, order)}
    top = max([order] + [image.r for image in forward.values()])
    return data, dot, forward, parabolic_algebra(ctx, data.mu, top)


def _iota_inverse(ctx: AlgebraContext, order: int, data: ShiftData | None = None, **_) -> List[CheckReport]:
    """The map back from the lower triangular shift returns every generator to the same element of Y_n."""
    data, dot, forward, alg = _iota_images(ctx, order, data)
    reports = []
    for idx, image in forward.items():
        back = iota_label(image, dot, data)
        reports.append(compare("iota-inverse", {"label": idx.label()}, alg.coefficient(back), alg.coefficient(idx)))
    return reports


def _iota_homomorphism(ctx: AlgebraContext, order: int, data: ShiftData | None = None, **_) -> List[CheckReport]:
    """[iota E_a^(r), iota F_a^(s)] = [E_a^(r), F_a^(s)]: both sides are D-coefficients of degree r + s - 1."""
    data, _dot, forward, alg = _iota_images(ctx, order, data)
    reports = []
    es = [idx for idx in forward if idx.family == "E"]
    fs = [idx for idx in forward if idx.family == "F"]
    for e, f in itertools.product(es, fs):
        if e.a != f.b:
            continue
        lhs = commutator(alg.coefficient(forward[e]), alg.coefficient(forward[f]))
        rhs = commutator(alg.coefficient(e), alg.coefficient(f))
        reports.append(compare("iota-homomorphism", {"e": e.label(), "f": f.label()}, lhs, rhs))
    return reports


MAP_PROPERTIES: Dict[str, Callable[..., List[CheckReport]]] = {
    "omega-involution": _omega_involution,
    "tau-involution": _tau_involution,
    "tau-anti": _tau_anti,
    "psi-identity": _psi_identity,
    "psi-drinfeld": _psi_drinfeld,
    "psi-block": _psi_block,
    "psi-homomorphism": _psi_homomorphism,
    "corner-reduction": _corner_reduction,
    "psi-b": _psi_b,
    "permutation-s": _permutation_s,
    "tau-ef": _tau_ef,
    "iota-inverse": _iota_inverse,
    "iota-homomorphism": _iota_homomorphism,
}


def verify_map_property(prop_id: str, ctx: AlgebraContext, order: int, **kwargs) -> List[CheckReport]:
    try:
        prop = MAP_PROPERTIES[prop_id]
    except KeyError as exc:
        raise MalformedInputError(f"unknown map property {prop_id!r}") from exc
    try:
        return prop(ctx, order, **kwargs)
    except BudgetError as exc:
        return [skipped(prop_id, {"n": ctx.n}, f"budget: {exc}")]
