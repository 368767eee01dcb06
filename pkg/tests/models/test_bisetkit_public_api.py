import sys

import bisetkit
from bisetkit import Workspace, fundamental_biset
from bisetkit.cli import main as cli_main
from bisetkit.gob import fundamental_biset as namespaced_fundamental_biset
from bisetkit.models import Certificate, CertificateKind, EquivalenceVerdict, VerdictOutcome


def test_bisetkit_namespace_exports_fundamental_biset():
    assert namespaced_fundamental_biset is fundamental_biset


def test_bisetkit_namespace_exports_everything_it_lists():
    assert all(hasattr(bisetkit, name) for name in bisetkit.__all__)
    assert "Workspace" in bisetkit.__all__


def test_bisetkit_cli_help_runs(monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["bisetkit"])
    assert cli_main() == 0
    assert "fund-biset" in capsys.readouterr().out


def test_bisetkit_cli_version_runs(monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["bisetkit", "--version"])
    assert cli_main() == 0
    assert capsys.readouterr().out.strip()


def test_verdict_serializes_with_enum_values():
    verdict = EquivalenceVerdict(
        outcome=VerdictOutcome.DISTINGUISHED,
        depth=2,
        word_length=1,
        certificate=Certificate(kind=CertificateKind.DEGREE, level=0, left="2", right="3"),
    )
    data = verdict.model_dump(mode="json")
    assert data["outcome"] == "distinguished"
    assert data["certificate"]["kind"] == "degree"
    assert EquivalenceVerdict.model_validate(data) == verdict
    assert verdict.distinguished


def test_workspace_resolves_fixtures_lazily():
    workspace = Workspace()
    assert len(workspace) == 0
    gob = workspace.get("basilica_lamination")
    assert "basilica_lamination" in workspace
    assert str(fundamental_biset(gob, "A", "C").biset).startswith("t = <1, t>(1 2)")
    assert not Workspace(use_fixtures=False).names()
