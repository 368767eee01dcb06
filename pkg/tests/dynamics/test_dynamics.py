from dataclasses import replace

import pytest

from bisetkit.analysis import equivalent_upto, level_actions, permutation_isomorphic
from bisetkit.bisets import tensor_wreath
from bisetkit.dynamics import (
    Peripheral,
    TuningSlot,
    basilica_hubbard,
    hubbard_to_gob,
    identity_slots,
    mating,
    peripheral_congruence,
    power_map,
    tuning,
    validate_bundle,
    z2_plus_i_hubbard,
)
from bisetkit.dynamics.fixtures import basilica_hubbard_fb, power_map_fb, z2_plus_i_fb
from bisetkit.errors import StructureError
from bisetkit.gob import check_left_fibrant, fundamental_biset, gob_product, validate_gob
from bisetkit.models import VerdictOutcome


def test_basilica_bundle_is_valid():
    report = validate_bundle(basilica_hubbard())
    assert report.valid
    assert report.details["degree"] == "2"
    assert report.details["essential"] == "y0a,y1"
    assert report.details["critical"] == "y1"
    assert report.details["ord:x0"] == "inf"


def test_bundle_with_wrong_degree_is_reported():
    bundle = replace(basilica_hubbard(), deg={"y1": 3})
    report = validate_bundle(bundle)
    assert not report.valid
    assert "degree" in {v.code for v in report.violations}


def test_bundle_with_wrong_embedding_is_reported():
    bundle = replace(basilica_hubbard(), embed={"x0": "y0a", "x1": "y0a"})
    report = validate_bundle(bundle)
    assert not report.valid
    assert "embed" in {v.code for v in report.violations}


def test_basilica_hubbard_gob_validates():
    gob = hubbard_to_gob(basilica_hubbard())
    assert validate_gob(gob).valid
    assert check_left_fibrant(gob).fibrant


def test_basilica_fundamental_biset_from_hubbard_tree():
    fb = basilica_hubbard_fb()
    assert fb.degree == 2
    assert str(fb.biset).splitlines() == ["x0 = <x1, 1>()", "x1 = <1, x0>(1 2)"]


def test_power_map_fundamental_biset_is_odometer():
    assert str(power_map_fb(2).biset) == "t = <1, t>(1 2)"
    assert power_map_fb(3).degree == 3
    assert validate_bundle(power_map(3)).valid


def test_z2_plus_i_compiles_to_degree_two_biset():
    assert validate_bundle(z2_plus_i_hubbard()).valid
    fb = z2_plus_i_fb()
    assert fb.degree == 2
    assert fb.biset.right_group.rank == 3


def test_peripheral_congruence_follows_the_cycle():
    biset = basilica_hubbard_fb().biset
    x0, x1 = biset.right_group.generators()
    images = peripheral_congruence(biset, x0 * x1, x0 * x1)
    assert images == ((biset.left_group.identity(), 1), (x0, 0))


def test_peripheral_congruence_rejects_two_orbits():
    biset = basilica_hubbard_fb().biset
    x0 = biset.right_group.generator(0)
    with pytest.raises(StructureError):
        peripheral_congruence(biset, x0, x0)


def test_mating_of_basilica_with_itself_is_valid():
    biset = basilica_hubbard_fb().biset
    x0, x1 = biset.right_group.generators()
    gob = mating(Peripheral(biset, x0 * x1, "P"), Peripheral(biset, x0 * x1, "Q"))
    assert gob.name == "P_mate_Q"
    assert validate_gob(gob).valid
    assert fundamental_biset(gob, "P", "P").degree == 2


def test_mating_rejects_degree_mismatch():
    basilica = basilica_hubbard_fb().biset
    x0, x1 = basilica.right_group.generators()
    cubic = power_map_fb(3).biset
    with pytest.raises(StructureError):
        mating(
            Peripheral(basilica, x0 * x1, "P"),
            Peripheral(cubic, cubic.right_group.generator(0), "Q"),
        )


def test_identity_tuning_keeps_the_fundamental_biset():
    gob = hubbard_to_gob(basilica_hubbard())
    cycle = ["y1", "y0a"]
    tuned = tuning(gob, cycle, identity_slots(gob, cycle))
    assert tuned.name == f"{gob.name}~tuned"
    assert validate_gob(tuned).valid
    original = fundamental_biset(gob, "x0", "x0").biset
    assert fundamental_biset(tuned, "x0", "x0").biset == original


def test_tuning_rejects_broken_cycles():
    gob = hubbard_to_gob(basilica_hubbard())
    with pytest.raises(StructureError):
        tuning(gob, ["y1", "y0a"], [])
    with pytest.raises(StructureError):
        tuning(gob, ["y1"], identity_slots(gob, ["y1"]))
    slot = identity_slots(gob, ["y1"])[0]
    cubic = power_map_fb(3).biset
    wrong = TuningSlot(cubic, slot.left_word, slot.right_word)
    with pytest.raises(StructureError):
        tuning(gob, ["y1", "y0a"], [wrong, identity_slots(gob, ["y0a"])[0]])


def _isomorphic_levels(first, second, depth: int) -> bool:
    pairs = zip(level_actions(first, depth), level_actions(second, depth))
    return all(permutation_isomorphic(a.perms, b.perms) for a, b in pairs)


def test_tuning_the_square_map_by_basilica_gives_basilica():
    basilica = basilica_hubbard_fb().biset
    x0, x1 = basilica.right_group.generators()
    gob = hubbard_to_gob(power_map(2))
    tuned = tuning(gob, ["t"], [TuningSlot(basilica, x0 * x1, x0 * x1)])
    assert validate_gob(tuned).valid
    assert check_left_fibrant(tuned).fibrant
    fb = fundamental_biset(tuned, "t", "t")
    assert str(fb.biset).splitlines() == ["x0 = <x1, 1>()", "x1 = <1, x0>(1 2)"]
    assert equivalent_upto(fb.biset, basilica, 6, 2).summary() == "ConsistentUpTo(6, 2)"


def test_mating_basilica_with_the_square_map():
    basilica = basilica_hubbard_fb().biset
    x0, x1 = basilica.right_group.generators()
    square = power_map_fb(2).biset
    t = square.right_group.generator(0)
    gob = mating(Peripheral(basilica, x0 * x1, "P"), Peripheral(square, t, "Q"))
    assert validate_gob(gob).valid
    assert check_left_fibrant(gob).fibrant
    fb = fundamental_biset(gob, "P", "P")
    assert fb.degree == 2
    assert fb.biset.right_group.generator_names == ("x0", "x1", "t")
    assert str(fb.biset).splitlines()[:2] == ["x0 = <x1, 1>()", "x1 = <1, x0>(1 2)"]
    # The edge group identifies the two loops around infinity.
    assert [str(r) for r in fb.left.relators] == ["x0*x1*t^-1"]
    assert [str(r) for r in fb.right.relators] == ["x0*x1*t^-1"]


def test_product_of_hubbard_gobs_is_the_tensor_square():
    gob = hubbard_to_gob(basilica_hubbard())
    product = gob_product(gob, gob)
    assert validate_gob(product).valid
    assert check_left_fibrant(product).fibrant
    fb = fundamental_biset(product, "x0", "x0")
    square = tensor_wreath(basilica_hubbard_fb().biset, basilica_hubbard_fb().biset)
    assert fb.degree == square.degree == 4
    assert _isomorphic_levels(fb.biset, square, 6)
    assert equivalent_upto(fb.biset, square, 6, 1).outcome is VerdictOutcome.CONSISTENT


@pytest.mark.parametrize(("degree", "depth"), [(3, 8), (5, 6)])
def test_power_map_recursion_is_an_odometer(degree, depth):
    fb = power_map_fb(degree)
    ones = ", ".join(["1"] * (degree - 1))
    cycle = " ".join(str(i) for i in range(1, degree + 1))
    assert str(fb.biset) == f"t = <{ones}, t>({cycle})"
    levels = level_actions(fb.biset, depth)
    for level in levels[1:]:
        assert level.cycle_types() == {"t": [degree**level.level]}
