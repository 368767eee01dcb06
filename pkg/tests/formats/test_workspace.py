from pathlib import Path

import pytest

from bisetkit.errors import ParseError, StructureError
from bisetkit.formats import EntryKind
from bisetkit.workspace import FIXTURE_LIBRARY, Workspace

DATA = Path(__file__).resolve().parents[2] / "data"


def test_load_file_registers_entries_in_order():
    workspace = Workspace()
    names = workspace.load_file(DATA / "basilica.biset")
    assert names == ["IMG", "basilica", "doubling", "odometer"]
    assert workspace.kind("IMG") is EntryKind.GROUP
    assert workspace.last(EntryKind.BISET) == "odometer"


def test_parsed_biset_equals_power_map_fixture():
    workspace = Workspace()
    workspace.load_text("biset copy : <t:inf> <- <t:inf> { t = <1, t>(1 2) }")
    assert workspace.get("copy") == workspace.get("power_map_2_fb")


def test_fixtures_can_be_disabled():
    workspace = Workspace(use_fixtures=False)
    with pytest.raises(StructureError):
        workspace.get("basilica_lamination")
    with pytest.raises(ParseError):
        workspace.load_text("gob g {\n  left_graph basilica_lamination\n}\n")


def test_names_are_unique_across_kinds():
    workspace = Workspace()
    workspace.load_text("group G = <a:2>")
    with pytest.raises(StructureError):
        workspace.load_text("cyclic G : <t> <- <t> degree 2")
    with pytest.raises(StructureError):
        workspace.get("G", EntryKind.BISET)


def test_validate_every_kind():
    workspace = Workspace()
    workspace.load_file(DATA / "basilica_lamination.gob")
    workspace.load_file(DATA / "basilica.htree")
    for name in ("lamination", "basilica_lamination", "basilica"):
        assert workspace.validate(name).valid
    assert workspace.validate("power_map_3_fb").valid


def test_emit_then_load_reproduces_the_workspace():
    workspace = Workspace()
    workspace.load_file(DATA / "basilica.biset")
    copy = Workspace(use_fixtures=False)
    copy.load_text(workspace.emit())
    for name in workspace.names():
        assert copy.get(name) == workspace.get(name)


def test_fixture_library_covers_power_maps():
    assert {"power_map_2", "power_map_3_fb", "z2_plus_i"} <= set(FIXTURE_LIBRARY)
