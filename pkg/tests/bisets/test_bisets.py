from fractions import Fraction

import pytest

from bisetkit.algebra import INFINITE, FpGroup, Homomorphism, conj_canonical
from bisetkit.bisets import (
    Congruence,
    CyclicBiset,
    DecoratedPermutation,
    TableBiset,
    WreathBiset,
    as_wreath,
    change_basis,
    contragredient,
    cyclic_group,
    lift_conjugacy,
    tensor,
    tensor_wreath,
    thurston_endomorphism,
    wreath_validate,
)
from bisetkit.errors import StructureError


def _odometer() -> WreathBiset:
    return as_wreath(CyclicBiset.regular(2))


def _swap_table() -> TableBiset:
    left = FpGroup.free_product([2], ["a"])
    right = FpGroup.free_product([2], ["b"])
    return TableBiset(left, right, ("x", "y"), ((1, 0),), ((1, 0),), name="swap")


def test_decorated_permutation_product_follows_right_action():
    group = cyclic_group(INFINITE)
    t = group.generator(0)
    x = DecoratedPermutation.from_cycles([group.identity(), t], [[0, 1]])
    square = x * x
    assert square.perm == (0, 1)
    assert square.decorations == (t, t)
    assert str(x) == "<1, t>(1 2)"
    assert str(square) == "<t, t>()"
    assert (x * x.inverse()).is_identity()
    assert x**-2 == square.inverse()


def test_decorated_permutation_rejects_bad_input():
    group = cyclic_group(INFINITE)
    with pytest.raises(ValueError):
        DecoratedPermutation((group.identity(),), (0, 1))
    with pytest.raises(ValueError):
        DecoratedPermutation((group.identity(), group.identity()), (0, 0))


def test_regular_cyclic_biset_is_the_odometer():
    wreath = _odometer()
    assert wreath.degree == 2
    assert wreath.basis == ("0", "1/2")
    assert str(wreath) == "t = <1, t>(1 2)"
    assert wreath_validate(wreath).valid


def test_cyclic_biset_locates_grid_points():
    biset = CyclicBiset.regular(3)
    word, index = biset.locate(Fraction(5, 3))
    assert str(word) == "t"
    assert index == 2
    assert biset.element(1, 2) == Fraction(5, 3)
    with pytest.raises(ValueError):
        biset.locate(Fraction(1, 2))


def test_cyclic_biset_action_must_be_well_defined():
    finite = cyclic_group(2)
    assert CyclicBiset(finite, finite, 1).violations() == []
    assert CyclicBiset(cyclic_group(INFINITE), finite, 2).violations()
    assert CyclicBiset(cyclic_group(INFINITE), finite, 2, right_trivial=True).violations() == []
    assert cyclic_group(1).is_trivial()


def test_wreath_validate_reports_broken_relations():
    group = FpGroup.free_product([2], ["a"])
    a = group.generator(0)
    good = WreathBiset.from_mapping(
        group, group, {"a": DecoratedPermutation.from_cycles([group.identity()] * 2, [[0, 1]])}
    )
    assert wreath_validate(good).valid
    bad = WreathBiset.from_mapping(
        group, group, {"a": DecoratedPermutation.from_cycles([a, group.identity()], [[0, 1]])}
    )
    report = wreath_validate(bad)
    assert not report.valid
    assert report.violations[0].code == "relation"


def test_wreath_equality_ignores_basis_and_name():
    wreath = _odometer()
    assert wreath.relabeled(("p", "q"), "other") == wreath


def test_tensor_of_cyclic_bisets_stays_cyclic():
    product = tensor(CyclicBiset.regular(2), CyclicBiset.regular(2))
    assert isinstance(product, CyclicBiset)
    assert product == CyclicBiset.regular(4)


def test_tensor_wreath_matches_degree_four_odometer():
    product = tensor_wreath(_odometer(), _odometer())
    assert product == as_wreath(CyclicBiset.regular(4))
    assert product.basis[:2] == ("0.0", "0.1/2")


def test_tensor_requires_matching_middle_group():
    other = WreathBiset.identity(FpGroup.free_product([2], ["a"]))
    with pytest.raises(StructureError):
        tensor(_odometer(), other)


def test_contragredient_of_principal_and_table_bisets():
    group = FpGroup.free_product([INFINITE, INFINITE])
    a, b = group.generators()
    swap = WreathBiset.from_homomorphism(Homomorphism(group, group, (b, a)), name="swap")
    dual = contragredient(swap)
    assert dual.homomorphism().then(swap.homomorphism()).is_identity()
    table_dual = contragredient(_swap_table())
    assert table_dual.left_group == _swap_table().right_group
    assert table_dual.name == "swap^v"
    with pytest.raises(StructureError):
        contragredient(_odometer())


def test_biprincipal_bisets():
    group = FpGroup.free_product([INFINITE, INFINITE])
    a, b = group.generators()
    assert WreathBiset.from_homomorphism(Homomorphism(group, group, (b, a))).is_biprincipal()
    squaring = WreathBiset.from_homomorphism(Homomorphism(group, group, (a * a, b)))
    assert squaring.is_principal()
    assert not squaring.is_biprincipal()
    assert not _odometer().is_biprincipal()


def test_table_biset_to_wreath():
    table = _swap_table()
    assert table.violations() == []
    assert table.is_left_free()
    wreath = table.to_wreath()
    assert wreath.degree == 1
    assert wreath.basis == ("x",)
    assert str(wreath) == "b = <a>()"


def test_table_biset_rejects_non_free_left_action():
    group = FpGroup.free_product([2], ["a"])
    fixed = TableBiset(group, FpGroup.trivial(), ("x",))
    assert not fixed.is_left_free()
    with pytest.raises(ValueError):
        fixed.to_wreath()


def test_lift_conjugacy_of_odometer():
    wreath = _odometer()
    t = wreath.right_group.generator(0)
    lifted = lift_conjugacy(wreath, conj_canonical(t))
    assert [str(term) for term in lifted] == ["2:[t]"]
    lifted_square = lift_conjugacy(wreath, conj_canonical(t**2))
    assert [str(term) for term in lifted_square] == ["1:[t]", "1:[t]"]


def test_lift_is_invariant_under_basis_change():
    wreath = _odometer()
    t = wreath.left_group.generator(0)
    w = DecoratedPermutation((t, wreath.left_group.identity()), (0, 1))
    changed = change_basis(wreath, w)
    assert str(changed) == "t = <t^-1, t^2>(1 2)"
    for k in (1, 2, 3):
        conj_class = conj_canonical(t**k)
        assert lift_conjugacy(changed, conj_class) == lift_conjugacy(wreath, conj_class)


def test_thurston_endomorphism_of_odometer():
    wreath = _odometer()
    t = wreath.right_group.generator(0)
    result = thurston_endomorphism(wreath, [conj_canonical(t)])
    assert result.entry(0, 0) == Fraction(1, 2)
    assert result.extra == ()
    with pytest.raises(StructureError):
        thurston_endomorphism(wreath, [conj_canonical(t), conj_canonical(t)])


def test_congruence_checks_equivariance():
    wreath = _odometer()
    identity = Congruence.identity(wreath)
    assert identity.is_identity()
    assert identity.check().valid
    one = wreath.left_group.identity()
    swapped = Congruence(
        wreath,
        wreath,
        Homomorphism.identity(wreath.left_group),
        Homomorphism.identity(wreath.right_group),
        ((one, 1), (one, 0)),
    )
    assert swapped.is_bijective()
    assert not swapped.check().valid
    assert identity.then(identity).is_identity()
