"""
Workspace: a named registry of groups, bisets, graphs and Hubbard trees.

Entries come from text documents, from the built-in fixture library or from
computations. Names are unique across kinds; the fixture library is
consulted for names that were not loaded, so ``basilica_lamination`` or
``power_map_2`` can be used without a file.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from pathlib import Path
from typing import Any

from .bisets import CyclicBiset, TableBiset, WreathBiset, wreath_validate
from .dynamics import (
    basilica_hubbard,
    basilica_lamination,
    hubbard_to_gob,
    power_map,
    validate_bundle,
    z2_plus_i_hubbard,
)
from .dynamics.fixtures import (
    basilica_hubbard_fb,
    basilica_lamination_fb,
    power_map_fb,
    z2_plus_i_fb,
)
from .errors import StructureError
from .formats import EntryKind, ParsedEntry, emit_entries, read_document
from .gob import validate_gob
from .logging import logger
from .models.reports import ValidationReport, Violation

FIXTURE_LIBRARY: dict[str, tuple[EntryKind, Callable[[], Any]]] = {
    "basilica_hubbard": (EntryKind.HTREE, basilica_hubbard),
    "basilica_hubbard_gob": (EntryKind.GOB, lambda: hubbard_to_gob(basilica_hubbard())),
    "basilica_hubbard_fb": (EntryKind.BISET, lambda: basilica_hubbard_fb().biset),
    "basilica_lamination": (EntryKind.GOB, basilica_lamination),
    "basilica_lamination_fb": (EntryKind.BISET, lambda: basilica_lamination_fb().biset),
    "z2_plus_i": (EntryKind.HTREE, z2_plus_i_hubbard),
    "z2_plus_i_fb": (EntryKind.BISET, lambda: z2_plus_i_fb().biset),
}
for _degree in (2, 3, 5):
    FIXTURE_LIBRARY[f"power_map_{_degree}"] = (
        EntryKind.HTREE,
        lambda d=_degree: power_map(d),
    )
    FIXTURE_LIBRARY[f"power_map_{_degree}_fb"] = (
        EntryKind.BISET,
        lambda d=_degree: power_map_fb(d).biset,
    )


class Workspace:
    """Registry of named structures."""

    def __init__(self, use_fixtures: bool = True) -> None:
        self.use_fixtures = use_fixtures
        self._entries: dict[str, ParsedEntry] = {}

    def __contains__(self, name: object) -> bool:
        return name in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[ParsedEntry]:
        return iter(self._entries.values())

    def add(self, name: str, kind: EntryKind, value: Any, line: int = 0) -> None:
        """Register ``value``.

        Raises:
            StructureError: if the name is taken.
        """
        if name in self._entries:
            raise StructureError(f"Workspace already has an entry named {name!r}")
        self._entries[name] = ParsedEntry(name, kind, value, line)

    def kind(self, name: str) -> EntryKind:
        return self._entry(name).kind

    def _entry(self, name: str) -> ParsedEntry:
        entry = self._entries.get(name)
        if entry is None and self.use_fixtures and name in FIXTURE_LIBRARY:
            kind, factory = FIXTURE_LIBRARY[name]
            logger.debug(f"workspace: loading fixture {name}")
            self.add(name, kind, factory())
            entry = self._entries[name]
        if entry is None:
            raise StructureError(f"Unknown workspace entry {name!r}")
        return entry

    def get(self, name: str, kind: EntryKind | None = None) -> Any:
        """Value of ``name``, loading a fixture if needed.

        Raises:
            StructureError: if the name is unknown or has another kind.
        """
        entry = self._entry(name)
        if kind is not None and entry.kind is not kind:
            raise StructureError(f"{name} is a {entry.kind.value}, expected a {kind.value}")
        return entry.value

    def names(self, kind: EntryKind | None = None) -> list[str]:
        return [e.name for e in self._entries.values() if kind is None or e.kind is kind]

    def last(self, kind: EntryKind) -> str:
        """Name of the most recently added entry of ``kind``."""
        names = self.names(kind)
        if not names:
            raise StructureError(f"Workspace has no {kind.value}")
        return names[-1]

    def load_text(self, text: str, source: str = "<string>") -> list[str]:
        """Parse a document into the workspace and return the new names.

        Raises:
            ParseError: on malformed text or unresolved names.
        """
        entries = read_document(text, source, lookup=self.get)
        for entry in entries:
            if entry.name in self._entries:
                raise StructureError(f"{source}: entry {entry.name!r} is already loaded")
        for entry in entries:
            self._entries[entry.name] = entry
        logger.info(f"workspace: loaded {len(entries)} entries from {source}")
        return [entry.name for entry in entries]

    def load_file(self, path: str | Path) -> list[str]:
        path = Path(path)
        return self.load_text(path.read_text(encoding="utf-8"), str(path))

    def validate(self, name: str) -> ValidationReport:
        entry = self._entry(name)
        value = entry.value
        if entry.kind is EntryKind.GOB:
            report = validate_gob(value)
        elif entry.kind is EntryKind.GOG:
            report = value.validate()
        elif entry.kind is EntryKind.HTREE:
            report = validate_bundle(value)
        elif isinstance(value, WreathBiset):
            report = wreath_validate(value)
        elif isinstance(value, (CyclicBiset, TableBiset)):
            violations = [
                Violation(code="action", subject=name, message=message)
                for message in value.violations()
            ]
            report = ValidationReport.from_violations(entry.kind.value, name, violations)
        else:
            report = ValidationReport.from_violations(entry.kind.value, name, [])
        return report.model_copy(update={"name": name})

    def emit(self, names: list[str] | None = None) -> str:
        selected = names if names is not None else self.names()
        return emit_entries((n, self.kind(n), self.get(n)) for n in selected)
