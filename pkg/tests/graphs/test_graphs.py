import random

import pytest

from bisetkit.algebra import INFINITE, FpGroup, Word
from bisetkit.bisets import cyclic_group
from bisetkit.dynamics import basilica_lamination
from bisetkit.errors import StructureError
from bisetkit.graphs import (
    EdgeSpec,
    Graph,
    GraphMorphism,
    GraphOfGroups,
    PathWord,
    add_edge,
    barycentric_subdivision,
    pi1_presentation,
    reduce_path,
    split_edge,
    subdivide_path,
    subdivided_tree,
    subdivision_vertex,
)

CASES = 50


def _segment() -> GraphOfGroups:
    return GraphOfGroups.build(
        {"u": FpGroup.free_product([2], ["a"]), "v": FpGroup.free_product([3], ["b"])},
        [EdgeSpec("e", "u", "v")],
        name="segment",
    )


def _loop() -> GraphOfGroups:
    return GraphOfGroups.build({"v": FpGroup.trivial()}, [EdgeSpec("e", "v", "v")], name="loop")


def _amalgam() -> GraphOfGroups:
    u = cyclic_group(INFINITE, "a")
    v = cyclic_group(INFINITE, "b")
    edge = cyclic_group(INFINITE, "c")
    return GraphOfGroups.build(
        {"u": u, "v": v},
        [EdgeSpec("e", "u", "v", edge, {"c": u.generator(0) ** 2}, {"c": v.generator(0) ** 3})],
        name="amalgam",
    )


def test_graph_reversal_and_origin():
    graph = Graph.build(("u", "v"), (("e", "u", "v"),))
    assert graph.reverse("e") == "~e"
    assert graph.reverse("~e") == "e"
    assert graph.reverse("u") == "u"
    assert graph.origin("~e") == "v"
    assert graph.terminus("e") == "v"
    assert graph.origin("u") == "u"
    assert graph.outgoing("v") == ["~e"]
    assert graph.is_tree()
    assert graph.betti_number() == 0


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph.build(("u",), (("e", "u", "w"),))
    with pytest.raises(ValueError):
        Graph.build(("u",), (("~e", "u", "u"),))
    with pytest.raises(ValueError):
        Graph.build(("u", "u"), ())


def test_loop_graph_has_betti_number_one():
    graph = _loop().graph
    assert graph.is_connected()
    assert not graph.is_tree()
    assert graph.betti_number() == 1
    assert graph.oriented_between("v", "v") == ["e", "~e"]


def test_graph_morphism_extends_to_reversed_edges():
    graph = Graph.build(("u", "v"), (("e", "u", "v"),))
    point = Graph.build(("p",), ())
    collapse = GraphMorphism(graph, point, {"u": "p", "v": "p", "e": "p"})
    assert collapse("~e") == "p"
    assert not collapse.is_simplicial()
    identity = GraphMorphism.identity(graph)
    assert identity("~e") == "~e"
    assert identity.is_isomorphism()


def test_gog_validation():
    assert _segment().validate().valid
    assert _amalgam().validate().valid
    u = cyclic_group(INFINITE, "a")
    torsion = cyclic_group(2, "c")
    broken = GraphOfGroups.build(
        {"u": u}, [EdgeSpec("e", "u", "u", torsion, {"c": u.generator(0)}, {"c": u.generator(0)})]
    )
    report = broken.validate()
    assert not report.valid
    assert {v.code for v in report.violations} >= {"edge_map"}


def test_pi1_of_tree_of_groups_is_free_product():
    presentation = pi1_presentation(_segment(), "u")
    assert presentation.group.generator_names == ("a", "b")
    assert [f.order for f in presentation.group.factors] == [2, 3]
    assert presentation.is_free_product()
    assert presentation.tree == frozenset({"e"})


def test_pi1_of_loop_has_one_stable_letter():
    gog = _loop()
    presentation = pi1_presentation(gog, "v")
    assert presentation.group.generator_names == ("e",)
    assert presentation.group.factors[0].order == INFINITE
    loop = PathWord.from_sequence(gog, "v", ["e"])
    assert str(presentation.to_word(loop)) == "e"
    assert str(presentation.to_word(loop.inverse(gog))) == "e^-1"
    loops = presentation.generator_loops()
    assert loops["e"].edges == ("e",)


def test_pi1_with_cyclic_edge_group_has_relator():
    presentation = pi1_presentation(_amalgam(), "u")
    assert not presentation.is_free_product()
    assert [str(r) for r in presentation.relators] == ["a^2*b^-3"]


def test_pi1_rejects_bad_basepoint_and_tree():
    with pytest.raises(StructureError):
        pi1_presentation(_segment(), "w")
    with pytest.raises(StructureError):
        pi1_presentation(_loop(), "v", tree={"e"})


def test_reduce_path_cancels_backtracks_through_edge_groups():
    gog = _amalgam()
    a = gog.group("u").generator(0)
    b = gog.group("v").generator(0)
    path = PathWord.from_sequence(gog, "u", ["e", b**3, "~e"])
    reduced = reduce_path(path, gog)
    assert reduced.steps == ()
    assert reduced.head == a**2


def test_reduce_path_normal_form_pushes_coset_across_edge():
    gog = _amalgam()
    a = gog.group("u").generator(0)
    b = gog.group("v").generator(0)
    path = PathWord.from_sequence(gog, "u", [a**3, "e"])
    reduced = reduce_path(path, gog)
    assert reduced.head == a
    assert reduced.steps == (("e", b**3),)


def test_path_validation_rejects_wrong_endpoints():
    gog = _segment()
    with pytest.raises(ValueError):
        PathWord.from_sequence(gog, "v", ["e"])
    with pytest.raises(ValueError):
        PathWord.from_sequence(gog, "u", ["e", "u"])


def test_barycentric_subdivision_names_halves_and_middles():
    subdivided = barycentric_subdivision(_amalgam())
    middle = subdivision_vertex("e")
    assert middle == "[e]"
    assert subdivided.graph.vertices == ("u", "v", middle)
    assert subdivided.graph.geometric_edges() == ["e-", "e+"]
    assert subdivided.graph.provenance["e-"] == "e"
    assert subdivided.validate().valid
    presentation = pi1_presentation(subdivided, "u")
    assert [str(r) for r in presentation.relators][0].startswith("a^2")


def _lamination() -> GraphOfGroups:
    return basilica_lamination().left


def _mapped_generators(original, target: GraphOfGroups, tree=None) -> list[str]:
    presentation = pi1_presentation(target, original.base, tree)
    return [
        str(presentation.to_word(subdivide_path(loop, target)))
        for loop in original.generator_loops().values()
    ]


def test_pi1_is_invariant_under_barycentric_subdivision():
    gog = _lamination()
    original = pi1_presentation(gog, "C", {"x"})
    subdivided = barycentric_subdivision(gog)
    tree = subdivided_tree(gog, {"x"})
    assert tree == {"x-", "x+", "y-"}
    assert _mapped_generators(original, subdivided, tree) == ["t", "u"]
    assert pi1_presentation(subdivided, "C", tree).relators == ()


def test_pi1_is_invariant_under_split_edge():
    gog = _lamination()
    original = pi1_presentation(gog, "C", {"x"})
    split = split_edge(gog, "~y")
    assert split.graph.vertices == ("C", "A", "[y]")
    assert split.validate().valid
    assert _mapped_generators(original, split, {"x", "y-"}) == ["t", "u"]
    # With the other half in the tree the old stable letter is carried by x.
    assert _mapped_generators(original, split, {"y-", "y+"}) == ["t", "x^-1"]


def test_pi1_under_add_edge_gains_a_generator_and_its_relator():
    gog = _lamination()
    original = pi1_presentation(gog, "C", {"x"})
    t = gog.group("C").generator(0)
    extended = add_edge(gog, "C", t, vertex_name="H")
    assert extended.validate().valid
    presentation = pi1_presentation(extended, "C", {"x", "C_to_H"})
    assert presentation.group.generator_names == ("t", "h", "u")
    assert [str(r) for r in presentation.relators] == ["t*h^-1"]
    loops = original.generator_loops().values()
    assert [str(presentation.to_word(loop)) for loop in loops] == ["t", "u"]
    with pytest.raises(ValueError):
        add_edge(gog, "C", t, vertex_name="A")


def _random_path(rng: random.Random, gog: GraphOfGroups, start: str, length: int) -> PathWord:
    items: list[str | Word] = []
    current = start
    for _ in range(length):
        items.append(gog.group(current).generator(0) ** rng.choice((-2, -1, 1, 2, 3)))
        edge = "e" if current == "u" else "~e"
        items.append(edge)
        current = gog.graph.terminus(edge)
    return PathWord.from_sequence(gog, start, items)


def test_reduce_path_is_idempotent_and_confluent():
    rng = random.Random(7)
    gog = _amalgam()
    for _ in range(CASES):
        path = _random_path(rng, gog, "u", rng.randint(0, 4))
        reduced = reduce_path(path, gog)
        assert reduce_path(reduced, gog) == reduced
        detour = _random_path(rng, gog, path.end(gog), rng.randint(1, 3))
        there_and_back = path.then(detour, gog).then(detour.inverse(gog), gog)
        assert reduce_path(there_and_back, gog) == reduced
