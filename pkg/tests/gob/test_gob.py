import pytest

from bisetkit.algebra import INFINITE, FpGroup
from bisetkit.analysis import level_actions, permutation_isomorphic
from bisetkit.bisets import CyclicBiset, TableBiset, WreathBiset, cyclic_group, wreath_validate
from bisetkit.dynamics import basilica_lamination
from bisetkit.dynamics.fixtures import basilica_lamination_fb
from bisetkit.errors import StructureError
from bisetkit.gob import (
    GobBuilder,
    check_left_fibrant,
    fundamental_biset,
    gob_barycentric,
    gob_product,
    identity_gob,
    validate_gob,
)
from bisetkit.graphs import EdgeSpec, GraphOfGroups


def _segment() -> GraphOfGroups:
    return GraphOfGroups.build(
        {"u": FpGroup.free_product([2], ["a"]), "v": FpGroup.free_product([3], ["b"])},
        [EdgeSpec("e", "u", "v")],
        name="segment",
    )


def test_identity_gob_is_valid_and_fibrant():
    gob = identity_gob(_segment())
    assert validate_gob(gob).valid
    assert check_left_fibrant(gob).fibrant
    assert gob.is_biprincipal()


def test_fundamental_biset_of_identity_gob_is_identity():
    fb = fundamental_biset(identity_gob(_segment()), "u", "u")
    assert fb.degree == 1
    assert fb.biset.homomorphism().is_identity()


def test_lamination_fundamental_biset():
    fb = fundamental_biset(basilica_lamination(), "A", "C")
    assert fb.degree == 2
    assert str(fb.biset).splitlines() == ["t = <1, t>(1 2)", "u = <u^-1, t>(1 2)"]
    assert [entry.label for entry in fb.basis] == ["S:1", "S:2"]


def test_fundamental_biset_runs_in_parallel_with_same_result():
    serial = fundamental_biset(basilica_lamination(), "A", "C")
    parallel = fundamental_biset(basilica_lamination(), "A", "C", jobs=2)
    assert parallel.biset == serial.biset
    assert parallel.max_path_length == serial.max_path_length > 0


def test_lamination_gob_validates():
    report = validate_gob(basilica_lamination())
    assert report.valid
    assert report.details["rho_simplicial"] == "true"
    assert report.details["lambda_simplicial"] == "false"


def test_fundamental_biset_rejects_unknown_basepoints():
    with pytest.raises(StructureError):
        fundamental_biset(basilica_lamination(), "Z", "C")
    with pytest.raises(StructureError):
        fundamental_biset(basilica_lamination(), "A", "Z")


def _unfibrant() -> GobBuilder:
    gog = GraphOfGroups.build({"v": FpGroup.trivial()}, [EdgeSpec("e", "v", "v")], name="loop")
    double = WreathBiset(FpGroup.trivial(), FpGroup.trivial(), 2, ())
    one = FpGroup.trivial().identity()
    return (
        GobBuilder(gog, gog, name="short")
        .vertex("z", "v", "v", double)
        .edge("f", "z", "z", "e", "e", TableBiset.trivial("f"), minus=[(one, 0)])
    )


def test_degree_mismatch_is_not_fibrant():
    gob = _unfibrant().build()
    check = check_left_fibrant(gob)
    assert not check.fibrant
    assert check.vertex == "z"
    assert "total degree 1" in (check.counterexample or "")
    with pytest.raises(StructureError):
        fundamental_biset(gob, "v", "v")


def test_single_vertex_gob_recovers_its_biset():
    circle = CyclicBiset.regular(2)
    gog = GraphOfGroups.build({"c": circle.left_group}, [], name="circle")
    gob = GobBuilder(gog, gog).vertex("z", "c", "c", circle).build()
    assert validate_gob(gob).valid
    fb = fundamental_biset(gob, "c", "c")
    assert str(fb.biset) == "t = <1, t>(1 2)"
    assert [entry.label for entry in fb.basis] == ["z:0", "z:1/2"]


def test_product_of_identity_gobs_is_identity_up_to_fundamental_biset():
    gob = identity_gob(_segment())
    product = gob_product(gob, gob)
    assert validate_gob(product).valid
    fb = fundamental_biset(product, "u", "u")
    assert fb.degree == 1
    assert fb.biset.homomorphism().is_identity()


def test_barycentric_subdivision_preserves_fundamental_biset():
    gob = basilica_lamination()
    subdivided = gob_barycentric(gob)
    assert validate_gob(subdivided).valid
    assert "[y1]" in subdivided.carrier.vertices
    assert subdivided.carrier.provenance["y1-"] == "y1"
    fb = fundamental_biset(subdivided, "A", "C")
    assert fb.degree == 2
    assert wreath_validate(fb.biset).valid
    levels = zip(level_actions(fb.biset, 8), level_actions(basilica_lamination_fb().biset, 8))
    for subdivided_level, level in levels:
        assert subdivided_level.cycle_types() == level.cycle_types()
        assert permutation_isomorphic(subdivided_level.perms, level.perms)


def test_invalid_vertex_biset_is_rejected_before_lifting():
    # Z/2 cannot act by a half step on the circle (1/2)Z.
    biset = CyclicBiset(cyclic_group(INFINITE, "t"), cyclic_group(2, "s"), 2)
    left = GraphOfGroups.build({"y": biset.left_group}, [], name="line")
    right = GraphOfGroups.build({"x": biset.right_group}, [], name="point")
    gob = GobBuilder(left, right).vertex("z", "y", "x", biset).build()
    assert not validate_gob(gob).valid
    with pytest.raises(StructureError, match="Invalid graph of bisets"):
        fundamental_biset(gob, "y", "x")


def test_product_of_lamination_gobs_stays_fibrant():
    gob = basilica_lamination()
    product = gob_product(gob, gob)
    assert validate_gob(product).valid
    assert check_left_fibrant(product).fibrant
    fb = fundamental_biset(product, "A", "C")
    assert fb.degree == 4
    assert wreath_validate(fb.biset).valid
