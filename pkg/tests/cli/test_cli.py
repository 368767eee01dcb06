import json
from pathlib import Path

from bisetkit.cli import EXIT_BUDGET, EXIT_INVALID, EXIT_OK, EXIT_PARSE, main
from bisetkit.formats import read_document

DATA = Path(__file__).resolve().parents[2] / "data"


def test_fund_biset_of_lamination_fixture(capsys):
    assert main(["fund-biset", "basilica_lamination", "--dagger", "A", "--star", "C"]) == EXIT_OK
    output = capsys.readouterr().out
    assert output.splitlines() == ["t = <1, t>(1 2)", "u = <u^-1, t>(1 2)"]


def test_fund_biset_json_lists_basis_paths(capsys):
    argv = ["fund-biset", "basilica_lamination", "--dagger", "A", "--star", "C", "--json"]
    assert main(argv) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["gob"] == "basilica_lamination"
    assert payload["biset"]["degree"] == 2
    assert sorted(payload["basis_paths"]) == ["S:1", "S:2"]


def test_fund_biset_from_file(capsys):
    path = str(DATA / "basilica_lamination.gob")
    assert main(["fund-biset", "-f", path, "--dagger", "A", "--star", "C"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("t = <1, t>(1 2)")


def test_parse_lists_entries(capsys):
    assert main(["parse", str(DATA / "basilica.biset")]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == [
        "IMG: group",
        "basilica: biset",
        "doubling: biset",
        "odometer: biset",
    ]


def test_parse_emit_round_trips(capsys):
    source = DATA / "basilica.biset"
    assert main(["parse", str(source), "--emit"]) == EXIT_OK
    emitted = {e.name: e.value for e in read_document(capsys.readouterr().out)}
    original = {e.name: e.value for e in read_document(source.read_text(encoding="utf-8"))}
    assert emitted == original


def test_pi1_of_lamination_graph_is_free(capsys):
    argv = ["pi1", "-f", str(DATA / "basilica_lamination.gob"), "lamination", "--base", "A"]
    assert main([*argv, "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["base"] == "A"
    assert payload["orders"] == [0, 0]
    assert payload["relators"] == []
    assert len(payload["stable_letters"]) == 1
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out.startswith("pi1(lamination, A) = ")


def test_parse_error_exit_code(tmp_path, capsys):
    broken = tmp_path / "broken.biset"
    text = "group G = <a:2>\nbiset B : G <- G {\n  a = <a, 1(1 2)\n}\n"
    broken.write_text(text, encoding="utf-8")
    assert main(["parse", str(broken)]) == EXIT_PARSE
    assert "broken.biset:3" in capsys.readouterr().err


def test_validate_reports_invalid_biset(tmp_path, capsys):
    path = tmp_path / "bad.biset"
    path.write_text("biset bad : <a:2> <- <a:2> { a = <a, 1>(1 2) }\n", encoding="utf-8")
    assert main(["validate", "-f", str(path)]) == EXIT_INVALID
    assert "[relation]" in capsys.readouterr().out


def test_validate_fixtures(capsys):
    assert main(["validate", "basilica_lamination", "basilica_hubbard"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["gob basilica_lamination: valid", "bundle basilica_hubbard: valid"]


def test_levels_budget_exceeded(capsys):
    argv = ["levels", "power_map_2_fb", "--depth", "5", "--budget", "max_depth=4"]
    assert main(argv) == EXIT_BUDGET
    assert "max_depth" in capsys.readouterr().err


def test_levels_prints_cycle_types(capsys):
    assert main(["levels", "basilica_lamination_fb", "--depth", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines == [
        "level 1 (2 points) orbits 2 t: 2; u: 2",
        "level 2 (4 points) orbits 4 t: 4; u: 2,2",
    ]


def test_equiv_verifies_certificate(capsys):
    argv = [
        "equiv",
        "power_map_2_fb",
        "basilica_lamination_fb",
        "--depth",
        "3",
        "--wordlen",
        "2",
        "--verify",
    ]
    assert main(argv) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["Distinguished: quotient_order at level 2 (4 vs 8)", "certificate verified"]


def test_equiv_inconclusive_search_has_no_certificate(capsys):
    argv = ["equiv", "basilica_lamination_fb", "basilica_lamination_fb", "--depth", "2"]
    assert main([*argv, "--wordlen", "0", "--verify"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "InconclusiveUpTo(2, 0): no forward and backward generator match"
    assert "certificate verified" not in lines
    assert main([*argv, "--wordlen", "0", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["outcome"] == "inconclusive"
    assert payload["certificate"] is None
    assert payload["search"]["matchings_tried"] == 0


def test_kernel_json(capsys):
    assert main(["kernel", "power_map_2_fb", "--level", "3", "--wordlen", "2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kernel"] == ["1"]
    assert payload["level"] == 3


def test_lift_and_tensor(capsys):
    assert main(["lift", "power_map_2_fb", "--class", "t^2"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1:[t] + 1:[t]"
    assert main(["tensor", "power_map_2_fb", "power_map_2_fb", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["degree"] == 4
    assert payload["name"] == "power_map_2_fb_power_map_2_fb"


def test_endo_and_classes(capsys):
    assert main(["endo", "power_map_2_fb", "--class", "t", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["matrix"] == [["1/2"]]
    assert payload["extra"] == []
    assert main(["classes", "power_map_2_fb", "--radius", "1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1].startswith("# classes found within the ball")


def test_hubbard_compile_tune_and_mate(capsys):
    assert main(["hubbard2gob", "basilica_hubbard"]) == EXIT_OK
    assert "gob basilica_hubbard_gob" in capsys.readouterr().out
    assert main(["tune", "basilica_hubbard_gob", "--cycle", "y1", "y0a"]) == EXIT_OK
    assert "gob basilica_hubbard_gob_tuned" in capsys.readouterr().out
    argv = [
        "mate",
        "basilica_hubbard_fb",
        "basilica_hubbard_fb",
        "--first-word",
        "x0*x1",
        "--second-word",
        "x0*x1",
        "--json",
    ]
    assert main(argv) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["vertices"] == ["basilica_hubbard_fb", "basilica_hubbard_fb'"]


def test_structure_errors_exit_invalid(capsys):
    assert main(["tune", "basilica_hubbard_gob", "--cycle", "y1"]) == EXIT_INVALID
    assert capsys.readouterr().err.startswith("error:")
    assert main(["fund-biset", "no_such_gob"]) == EXIT_INVALID


def test_schema_and_fixtures(capsys):
    assert main(["schema", "EquivalenceVerdict"]) == EXIT_OK
    schema = json.loads(capsys.readouterr().out)
    assert "certificate" in schema["properties"]
    assert main(["schema", "Nope"]) == EXIT_INVALID
    capsys.readouterr()
    assert main(["fixtures"]) == EXIT_OK
    assert "basilica_lamination: gob" in capsys.readouterr().out.splitlines()


def test_verbose_emits_info_logs(capsys):
    assert main(["-v", "parse", str(DATA / "basilica.htree")]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.strip() == "basilica: htree"
    assert "INFO | bisetkit" in captured.err
    assert "parse: finished in" in captured.err


def test_log_level_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("BISETKIT_LOG_LEVEL", "debug")
    assert main(["fixtures"]) == EXIT_OK
    assert "fixtures: started" in capsys.readouterr().err
    monkeypatch.delenv("BISETKIT_LOG_LEVEL")
    assert main(["fixtures"]) == EXIT_OK
    assert capsys.readouterr().err == ""
