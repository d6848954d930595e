# Tests/test_maps.py
import pytest

from Core.errors import BudgetError, MalformedInputError, MapPreconditionError, MissingImageError
from Core.maps import (
    MAP_PROPERTIES,
    apply_symmetry,
    check_iota,
    identity_images,
    iota_label,
    lower_transfer,
    omega_images,
    permutation_images,
    phi_images,
    shift_map_psi,
    tau_images,
    transposition,
    verify_map_property,
)
from Core.parabolic import ParabolicIndex
from Core.pbw_engine import AlgebraContext
from Core.shapes import Composition, ShiftData, ShiftMatrix

Y1 = AlgebraContext(1, 5)
Y2 = AlgebraContext(2, 3)


def test_omega_on_y1():
    omega = omega_images(Y1, 3)
    t1, t2 = Y1.gen(1, 1, 1), Y1.gen(1, 1, 2)
    assert omega.image(1, 1, 1) == t1
    assert omega.image(1, 1, 2) == t1 * t1 - t2
    assert omega.after(omega).is_identity()


def test_tau_is_an_antiautomorphism():
    tau = tau_images(Y2, 3)
    assert tau.anti
    assert tau(Y2.gen(1, 2, 3)) == Y2.gen(2, 1, 3)
    x, y = Y2.gen(1, 2, 1), Y2.gen(2, 2, 2)
    assert tau(x * y) == tau(y) * tau(x)
    assert not tau.after(tau).anti


def test_permutation_images():
    w = permutation_images([2, 1], Y2, 2)
    assert w(Y2.gen(1, 1, 2)) == Y2.gen(2, 2, 2)
    assert w.after(w).is_identity()
    with pytest.raises(MalformedInputError):
        permutation_images([1, 1], Y2, 2)


def test_transposition_one_line():
    assert transposition(3, 1, 3) == [3, 2, 1]
    assert transposition(3, 2, 2) == [1, 2, 3]


def test_phi_and_psi_change_the_target():
    phi = phi_images(1, Y1, 2)
    assert phi.target == AlgebraContext(2, 5)
    assert phi(Y1.gen(1, 1, 2)) == phi.target.gen(2, 2, 2)
    psi = shift_map_psi(0, Y2, 3)
    assert psi.is_identity()
    # psi_1 t^{(1)} = t_22^{(1)} in low degree
    assert shift_map_psi(1, Y1, 2).image(1, 1, 1) == AlgebraContext(2, 5).gen(2, 2, 1)


def test_tables_refuse_out_of_range_letters():
    tau = tau_images(Y2, 2)
    with pytest.raises(MissingImageError):
        tau.image(1, 1, 3)
    with pytest.raises(BudgetError):
        tau(Y2.gen(1, 1, 3))
    with pytest.raises(MalformedInputError):
        tau(AlgebraContext(2, 5).gen(1, 1, 1))
    with pytest.raises(MalformedInputError):
        identity_images(Y1, 2).after(tau)


def test_change_of_shift_regrades_labels():
    mu = Composition.ones(2)
    source = ShiftData(ShiftMatrix.parse("0,1;0,0"), mu)
    target = ShiftData(lower_transfer(source.sigma), mu)
    assert target.sigma == ShiftMatrix.parse("0,0;1,0")
    e2 = ParabolicIndex("E", 1, 2, 1, 1, 2)
    assert iota_label(e2, source, target) == e2.with_r(1)
    f1 = ParabolicIndex("F", 2, 1, 1, 1, 1)
    assert iota_label(f1, source, target) == f1.with_r(2)
    d = ParabolicIndex("D", 1, 1, 1, 1, 3)
    assert iota_label(d, source, target) == d
    with pytest.raises(MapPreconditionError):
        iota_label(e2.with_r(1), source, target)


def test_change_of_shift_preconditions():
    mu = Composition.ones(2)
    with pytest.raises(MapPreconditionError):
        check_iota(ShiftData(ShiftMatrix.parse("0,1;0,0"), mu), ShiftData(ShiftMatrix.zero(2), mu))
    with pytest.raises(MapPreconditionError):
        check_iota(ShiftData(ShiftMatrix.zero(2), mu), ShiftData(ShiftMatrix.zero(2), Composition((2,))))


def test_apply_symmetry_dispatch():
    assert apply_symmetry("tau", Y2.gen(1, 2, 3)) == Y2.gen(2, 1, 3)
    assert apply_symmetry("permutation", Y2.gen(1, 2, 1), w=[2, 1]) == Y2.gen(2, 1, 1)
    with pytest.raises(MalformedInputError):
        apply_symmetry("iota", Y2.gen(1, 1, 1))
    with pytest.raises(MalformedInputError):
        apply_symmetry("mirror", Y2.gen(1, 1, 1))


@pytest.mark.parametrize("prop_id", sorted(MAP_PROPERTIES))
def test_property_catalog_on_y2(prop_id):
    reports = verify_map_property(prop_id, Y2, 3, samples=2)
    assert all(r.status != "fail" for r in reports), [r for r in reports if r.status == "fail"][:1]


def test_corner_reduction_for_a_single_block():
    reports = verify_map_property("corner-reduction", Y2, 2, mu=Composition((2,)))
    assert len(reports) == 4
    assert all(r.status == "pass" for r in reports)


def test_unknown_map_property():
    with pytest.raises(MalformedInputError):
        verify_map_property("psi-inverse", Y2, 2)


def test_change_of_shift_on_elements():
    data = ShiftData(ShiftMatrix.parse("0,1;0,0"), Composition.ones(2))
    inverse = verify_map_property("iota-inverse", Y2, 3, data=data)
    assert inverse and all(r.status == "pass" for r in inverse)
    bracket = verify_map_property("iota-homomorphism", Y2, 3, data=data)
    assert {r.params["e"] for r in bracket} == {"E[1,2;1,1](2)", "E[1,2;1,1](3)"}
    assert len(bracket) == 6
    assert all(r.status == "pass" for r in bracket)
