from pathlib import Path

import pytest

from bisetkit.algebra import FpGroup
from bisetkit.bisets import CyclicBiset, WreathBiset, as_wreath
from bisetkit.dynamics import basilica_hubbard, basilica_lamination, power_map
from bisetkit.dynamics.fixtures import basilica_lamination_fb
from bisetkit.errors import ParseError
from bisetkit.formats import (
    EntryKind,
    emit_biset,
    emit_entries,
    parse_group,
    parse_recursion,
    parse_word,
    read_document,
    read_entry,
)
from bisetkit.gob import fundamental_biset

DATA = Path(__file__).resolve().parents[2] / "data"


def _read(name: str) -> str:
    return (DATA / name).read_text(encoding="utf-8")


def test_parse_group_forms():
    assert parse_group("<t:inf, a:2>") == FpGroup.free_product([0, 2], ["t", "a"])
    assert parse_group("<>").is_trivial()
    assert [f.order for f in parse_group("Z * Z/3").factors] == [0, 3]
    with pytest.raises(ValueError):
        parse_group("<t:0.5>")


def test_parse_word_and_recursion():
    group = parse_group("<t:inf, u:inf>")
    assert str(parse_word("u^-1*t", group)) == "u^-1*t"
    assert parse_word("1", group).is_identity()
    entry = parse_recursion("<u^-1, t>(1 2)", group)
    assert entry.perm == (1, 0)
    assert str(entry) == "<u^-1, t>(1 2)"
    with pytest.raises(ValueError):
        parse_word("t*z", group)
    with pytest.raises(ValueError):
        parse_recursion("<1, t>(1 3)", group)


def test_basilica_htree_file_matches_fixture():
    [entry] = read_document(_read("basilica.htree"), "basilica.htree")
    assert entry.kind is EntryKind.HTREE
    assert entry.line == 2
    assert entry.value == basilica_hubbard()


def test_power_map_htree_file_matches_fixture():
    assert read_entry(_read("power_map_2.htree"), EntryKind.HTREE) == power_map(2)


def test_htree_round_trip():
    text = emit_entries([("basilica", EntryKind.HTREE, basilica_hubbard())])
    assert read_entry(text, EntryKind.HTREE) == basilica_hubbard()


def test_lamination_gob_file_has_the_basilica_biset():
    entries = read_document(_read("basilica_lamination.gob"))
    assert [(e.name, e.kind) for e in entries] == [
        ("lamination", EntryKind.GOG),
        ("basilica_lamination", EntryKind.GOB),
    ]
    fb = fundamental_biset(entries[1].value, "A", "C")
    assert fb.biset == basilica_lamination_fb().biset


def test_gob_round_trip_emits_its_graphs_first():
    gob = basilica_lamination()
    text = emit_entries([("lamination_gob", EntryKind.GOB, gob)])
    entries = read_document(text)
    assert [e.kind for e in entries] == [EntryKind.GOG, EntryKind.GOB]
    assert entries[-1].value == gob


def test_biset_file_entries():
    entries = {e.name: e.value for e in read_document(_read("basilica.biset"))}
    assert isinstance(entries["basilica"], WreathBiset)
    assert entries["basilica"] == basilica_lamination_fb().biset
    assert isinstance(entries["doubling"], CyclicBiset)
    assert as_wreath(entries["doubling"]) == entries["odometer"]


def test_biset_round_trip():
    biset = basilica_lamination_fb().biset
    assert read_entry(emit_biset("basilica", biset), EntryKind.BISET) == biset
    cyclic = CyclicBiset.regular(3)
    assert read_entry(emit_biset("cubic", cyclic), EntryKind.BISET) == cyclic


def test_bad_angle_is_reported_on_its_line():
    text = _read("basilica.htree").replace("angle y1 g 1/2", "angle y1 g 1/x")
    with pytest.raises(ParseError) as excinfo:
        read_document(text, "broken.htree")
    assert excinfo.value.line == 18
    assert excinfo.value.source == "broken.htree"


def test_unknown_names_are_parse_errors():
    with pytest.raises(ParseError) as excinfo:
        read_document("biset B : G <- G { t = <t>() }")
    assert "G" in excinfo.value.message
    with pytest.raises(ParseError):
        read_document("widget W { }")


def test_duplicate_names_are_rejected():
    with pytest.raises(ParseError) as excinfo:
        read_document("group G = <a:2>\ngroup G = <b:3>\n")
    assert excinfo.value.line == 2


def test_unbalanced_braces_are_rejected():
    with pytest.raises(ParseError) as excinfo:
        read_document("group G = <a:2> }")
    assert "Unmatched" in excinfo.value.message
    with pytest.raises(ParseError) as excinfo:
        read_document("gog Y {\n  vertex v group <>\n")
    assert excinfo.value.line == 1


def test_read_entry_checks_the_kind():
    with pytest.raises(ParseError):
        read_entry("group G = <a:2>", EntryKind.BISET)
