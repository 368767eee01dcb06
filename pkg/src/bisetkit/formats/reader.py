"""
Reader for workspace documents.

A document is a sequence of named entries::

    group G = <t:inf, u:inf>

    biset B : G <- G {
      basis 1 2
      t = <1, t>(1 2)
      u = <u^-1, t>(1 2)
    }

    cyclic Z2 : <t:inf> <- <t:inf> degree 2
    table P : <> <- <> { elements p }

    gog Y {
      vertex v group Z/2
      edge e from v to w group <c:inf> into_minus a into_plus b^2 label x
    }

    gob F {
      left_graph Y
      right_graph Y
      carrier { vertex z; edge f from z to z'; provenance f -> e }
      lambda { z -> v; f -> e }
      rho { z -> v; f -> e }
      biset z = cyclic(n=2, d=2, right=active)
      biset f = wreath { basis 1; c = <c>() }
      minus f -> 1|0
      reverse f -> 1|1
    }

    htree H {
      base { vertex v ord inf; edge e v w; angle v e 1/3 }
      cover { ... }
      map p v1 -> v
      map lam v1 -> e
      deg v1 2
      embed v -> v1
    }

Names may refer to entries read earlier in the same document or to entries
supplied by ``lookup``.
"""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from ..algebra import FpGroup, Word
from ..bisets import Biset, CyclicBiset, TableBiset, WreathBiset, as_wreath
from ..bisets.congruence import Element
from ..dynamics import HubbardBundle, HubbardTree
from ..errors import ParseError
from ..gob import GobBuilder, GraphOfBisets
from ..graphs import Edge, EdgeSpec, Graph, GraphOfGroups, geometric_name
from ..logging import logger
from .lexer import Statement, parse_statements
from .values import (
    parse_angle,
    parse_elements,
    parse_group,
    parse_order,
    parse_recursion,
    parse_word,
)

CYCLIC_SPEC_RE = re.compile(r"cyclic\s*\((?P<args>[^)]*)\)")


class EntryKind(str, Enum):
    GROUP = "group"
    BISET = "biset"
    GOG = "gog"
    GOB = "gob"
    HTREE = "htree"


@dataclass(frozen=True)
class ParsedEntry:
    name: str
    kind: EntryKind
    value: Any
    line: int = 0


Lookup = Callable[[str, EntryKind], Any]


def _positioned(statement: Statement, index: int, parse: Callable[..., Any], *args: Any) -> Any:
    """Call ``parse(*args)`` and report a ``ValueError`` at token ``index``."""
    try:
        return parse(*args)
    except ParseError:
        raise
    except (ValueError, KeyError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        raise statement.error(str(message), index)


def _arrow(statement: Statement, start: int) -> tuple[str, str]:
    """Read ``SOURCE -> TARGET`` from token ``start``."""
    words = statement.words(start)
    if len(words) != 3 or words[1] != "->":
        raise statement.error("Expected 'SOURCE -> TARGET'", start)
    return words[0], words[2]


def _options(statement: Statement, start: int, keys: frozenset[str]) -> dict[str, tuple[str, int]]:
    """Split the head from token ``start`` into ``key value...`` pairs.

    Values run up to the next key and may contain spaces.
    """
    found: dict[str, tuple[str, int]] = {}
    tokens = statement.tokens
    index = start
    while index < len(tokens):
        key = tokens[index].text
        if key not in keys:
            raise statement.error(f"Unexpected {key!r}; expected one of {sorted(keys)}", index)
        if key in found:
            raise statement.error(f"Repeated {key!r}", index)
        end = index + 1
        while end < len(tokens) and tokens[end].text not in keys:
            end += 1
        if end == index + 1:
            raise statement.error(f"Missing value after {key!r}", index)
        stop = tokens[end].offset if end < len(tokens) else statement.end
        value = statement.text[tokens[index + 1].offset : stop].strip()
        found[key] = (value, index + 1)
        index = end
    return found


@dataclass
class _GobParts:
    left: str = ""
    right: str = ""
    vertices: list[str] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)
    provenance: dict[str, str] = field(default_factory=dict)
    lam: dict[str, str] = field(default_factory=dict)
    rho: dict[str, str] = field(default_factory=dict)
    bisets: dict[str, Statement] = field(default_factory=dict)
    minus: dict[str, Statement] = field(default_factory=dict)
    reverse: dict[str, Statement] = field(default_factory=dict)


class DocumentReader:
    """Parse documents into entries, resolving names as it goes."""

    def __init__(self, source: str = "<string>", lookup: Lookup | None = None) -> None:
        self.source = source
        self.lookup = lookup
        self.entries: dict[str, ParsedEntry] = {}
        self._handlers: dict[str, Callable[[Statement], ParsedEntry]] = {
            "group": self._group,
            "biset": self._biset,
            "cyclic": self._cyclic,
            "table": self._table,
            "gog": self._gog,
            "gob": self._gob,
            "htree": self._htree,
        }

    def read(self, text: str) -> list[ParsedEntry]:
        parsed = []
        for statement in parse_statements(text, self.source):
            handler = self._handlers.get(statement.keyword)
            if handler is None:
                raise statement.error(f"Unknown entry kind {statement.keyword!r}")
            name = statement.expect(1, "entry name")
            if name in self.entries:
                raise statement.error(f"Duplicate entry name {name!r}", 1)
            entry = handler(statement)
            self.entries[name] = entry
            parsed.append(entry)
            logger.debug(f"reader: {self.source}:{entry.line} {entry.kind.value} {name}")
        return parsed

    def resolve(self, statement: Statement, index: int, name: str, kind: EntryKind) -> Any:
        entry = self.entries.get(name)
        if entry is not None:
            if entry.kind is not kind:
                raise statement.error(
                    f"{name} is a {entry.kind.value}, expected {kind.value}", index
                )
            return entry.value
        if self.lookup is not None:
            return _positioned(statement, index, self.lookup, name, kind)
        raise statement.error(f"Unknown {kind.value} {name!r}", index)

    def _group_value(self, statement: Statement, index: int, text: str) -> FpGroup:
        return _positioned(
            statement,
            index,
            lambda: parse_group(
                text, lambda name: self.resolve(statement, index, name, EntryKind.GROUP)
            ),
        )

    def _signature(self, statement: Statement) -> tuple[FpGroup, FpGroup]:
        """``NAME : LEFT <- RIGHT`` at the head of a biset statement."""
        if statement.expect(2, "':'") != ":":
            raise statement.error("Expected ':' after the biset name", 2)
        head = statement.rest(3)
        groups = head.partition(" degree ")[0]
        left, sep, right = groups.partition("<-")
        if not sep:
            raise statement.error("Expected 'LEFT <- RIGHT'", 3)
        return (
            self._group_value(statement, 3, left),
            self._group_value(statement, 3, right),
        )

    def _group(self, statement: Statement) -> ParsedEntry:
        name = statement.tokens[1].text
        if statement.expect(2, "'='") != "=":
            raise statement.error("Expected '=' after the group name", 2)
        group = self._group_value(statement, 3, statement.rest(3))
        return ParsedEntry(name, EntryKind.GROUP, group, statement.line)

    def _biset(self, statement: Statement) -> ParsedEntry:
        name = statement.tokens[1].text
        left, right = self._signature(statement)
        biset = self.wreath_body(statement, left, right, name)
        return ParsedEntry(name, EntryKind.BISET, biset, statement.line)

    def _cyclic(self, statement: Statement) -> ParsedEntry:
        name = statement.tokens[1].text
        left, right = self._signature(statement)
        words = statement.words()
        if "degree" not in words:
            raise statement.error("Missing 'degree D'", len(words) - 1)
        index = words.index("degree") + 1
        degree = _positioned(statement, index, lambda: int(statement.expect(index, "degree")))
        trivial = words[index + 1 :] == ["trivial"]
        if words[index + 1 :] and not trivial:
            raise statement.error("Only 'trivial' may follow the degree", index + 1)
        biset = _positioned(
            statement, 0, lambda: CyclicBiset(left, right, degree, trivial, name=name)
        )
        return ParsedEntry(name, EntryKind.BISET, biset, statement.line)

    def _table(self, statement: Statement) -> ParsedEntry:
        name = statement.tokens[1].text
        left, right = self._signature(statement)
        biset = self.table_body(statement, left, right, name)
        return ParsedEntry(name, EntryKind.BISET, biset, statement.line)

    def wreath_body(
        self, statement: Statement, left: FpGroup, right: FpGroup, name: str
    ) -> WreathBiset:
        if statement.block is None:
            raise statement.error("Expected a '{ ... }' block with the recursion")
        basis: list[str] = []
        recursion = {}
        degree: int | None = None
        for line in statement.block:
            if line.keyword == "basis":
                basis = line.words(1)
                degree = len(basis)
                continue
            generator = line.keyword
            if line.expect(1, "'='") != "=":
                raise line.error("Expected 'generator = <...>(...)'", 1)
            if generator not in right.generator_names:
                raise line.error(f"{generator!r} is not a generator of {right}")
            if generator in recursion:
                raise line.error(f"Repeated generator {generator!r}")
            entry = _positioned(line, 2, parse_recursion, line.rest(2), left, degree)
            degree = entry.degree
            recursion[generator] = entry
        if degree is None:
            raise statement.error("Biset needs a basis or at least one recursion line")
        if not basis:
            basis = [str(i + 1) for i in range(degree)]
        return _positioned(
            statement,
            0,
            lambda: WreathBiset.from_mapping(left, right, recursion, basis, name),
        )

    def table_body(
        self, statement: Statement, left: FpGroup, right: FpGroup, name: str
    ) -> TableBiset:
        if statement.block is None:
            raise statement.error("Expected a '{ ... }' block with the elements")
        elements: list[str] = []
        tables: dict[str, dict[str, tuple[int, ...]]] = {"left": {}, "right": {}}
        for line in statement.block:
            if line.keyword == "elements":
                elements = line.words(1)
                continue
            if line.keyword not in tables:
                raise line.error("Expected 'elements', 'left' or 'right'")
            group = left if line.keyword == "left" else right
            generator = line.expect(1, "generator")
            if generator not in group.generator_names:
                raise line.error(f"{generator!r} is not a generator of {group}", 1)
            if line.expect(2, "'='") != "=":
                raise line.error("Expected '='", 2)
            images = line.words(3)
            unknown = [x for x in images if x not in elements]
            if unknown or len(images) != len(elements):
                raise line.error("Images must list one known element per element", 3)
            tables[line.keyword][generator] = tuple(elements.index(x) for x in images)
        if not elements:
            raise statement.error("Table biset needs 'elements'")
        identity = tuple(range(len(elements)))
        return _positioned(
            statement,
            0,
            lambda: TableBiset(
                left,
                right,
                tuple(elements),
                tuple(tables["left"].get(g, identity) for g in left.generator_names),
                tuple(tables["right"].get(g, identity) for g in right.generator_names),
                name,
            ),
        )

    def _gog(self, statement: Statement) -> ParsedEntry:
        name = statement.tokens[1].text
        if statement.block is None:
            raise statement.error("Expected a '{ ... }' block")
        vertices: dict[str, FpGroup] = {}
        specs: list[EdgeSpec] = []
        provenance: dict[str, str] = {}
        pending: list[tuple[Statement, dict[str, tuple[str, int]]]] = []
        for line in statement.block:
            if line.keyword == "vertex":
                vertex = line.expect(1, "vertex name")
                if vertex in vertices:
                    raise line.error(f"Repeated vertex {vertex!r}", 1)
                options = _options(line, 2, frozenset({"group"}))
                text, index = options.get("group", ("<>", 1))
                vertices[vertex] = self._group_value(line, index, text)
            elif line.keyword == "edge":
                words = line.words()
                if len(words) < 6 or words[2] != "from" or words[4] != "to":
                    raise line.error("Expected 'edge NAME from ORIGIN to TERMINUS'")
                keys = frozenset({"group", "into_minus", "into_plus", "label"})
                pending.append((line, _options(line, 6, keys)))
            elif line.keyword == "provenance":
                source, target = _arrow(line, 1)
                provenance[source] = target
            else:
                raise line.error(f"Unknown gog statement {line.keyword!r}")
        for line, options in pending:
            edge, origin, terminus = line.tokens[1].text, line.tokens[3].text, line.tokens[5].text
            for index, vertex in ((3, origin), (5, terminus)):
                if vertex not in vertices:
                    raise line.error(f"Unknown vertex {vertex!r}", index)
            text, index = options.get("group", ("<>", 1))
            group = self._group_value(line, index, text)
            into = {
                key: self._edge_images(line, options, key, group, vertices[vertex])
                for key, vertex in (("into_minus", origin), ("into_plus", terminus))
            }
            label = options.get("label", ("", 0))[0] or None
            specs.append(
                EdgeSpec(
                    edge, origin, terminus, group, into["into_minus"], into["into_plus"], label
                )
            )
        gog = _positioned(
            statement, 1, lambda: GraphOfGroups.build(vertices, specs, name, provenance)
        )
        return ParsedEntry(name, EntryKind.GOG, gog, statement.line)

    def _edge_images(
        self,
        line: Statement,
        options: dict[str, tuple[str, int]],
        key: str,
        group: FpGroup,
        target: FpGroup,
    ) -> dict[str, Word]:
        if key not in options:
            return {}
        text, index = options[key]
        if "=" not in text:
            if group.rank != 1:
                raise line.error(f"{key} needs 'generator=word' pairs for {group}", index)
            word = _positioned(line, index, parse_word, text, target)
            return {group.generator_names[0]: word}
        images = {}
        for chunk in text.split(","):
            generator, _, word_text = chunk.partition("=")
            generator = generator.strip()
            if generator not in group.generator_names:
                raise line.error(f"{generator!r} is not a generator of {group}", index)
            images[generator] = _positioned(line, index, parse_word, word_text, target)
        return images

    def _gob(self, statement: Statement) -> ParsedEntry:
        name = statement.tokens[1].text
        if statement.block is None:
            raise statement.error("Expected a '{ ... }' block")
        parts = _GobParts()
        for line in statement.block:
            keyword = line.keyword
            if keyword in ("left_graph", "right_graph"):
                setattr(parts, keyword.split("_")[0], line.expect(1, "graph name"))
            elif keyword == "carrier":
                self._carrier(line, parts)
            elif keyword in ("lambda", "rho"):
                target = parts.lam if keyword == "lambda" else parts.rho
                for item in line.block or []:
                    source, image = _arrow(item, 0)
                    target[source] = image
            elif keyword == "biset":
                x = line.expect(1, "object")
                if line.expect(2, "'='") != "=":
                    raise line.error("Expected 'biset OBJECT = ...'", 2)
                parts.bisets[x] = line
            elif keyword in ("minus", "reverse"):
                x = line.expect(1, "object")
                if line.expect(2, "'->'") != "->":
                    raise line.error(f"Expected '{keyword} OBJECT -> elements'", 2)
                (parts.minus if keyword == "minus" else parts.reverse)[x] = line
            else:
                raise line.error(f"Unknown gob statement {keyword!r}")
        gob = self._assemble(statement, name, parts)
        return ParsedEntry(name, EntryKind.GOB, gob, statement.line)

    def _carrier(self, line: Statement, parts: _GobParts) -> None:
        for item in line.block or []:
            if item.keyword == "vertex":
                parts.vertices.extend(item.words(1))
            elif item.keyword == "edge":
                words = item.words()
                if len(words) != 6 or words[2] != "from" or words[4] != "to":
                    raise item.error("Expected 'edge NAME from ORIGIN to TERMINUS'")
                parts.edges.append(Edge(words[1], words[3], words[5]))
            elif item.keyword == "provenance":
                source, target = _arrow(item, 1)
                parts.provenance[source] = target
            else:
                raise item.error(f"Unknown carrier statement {item.keyword!r}")

    def _assemble(self, statement: Statement, name: str, parts: _GobParts) -> GraphOfBisets:
        if not parts.left or not parts.right:
            raise statement.error("A gob needs 'left_graph' and 'right_graph'")
        left = self.resolve(statement, 0, parts.left, EntryKind.GOG)
        right = self.resolve(statement, 0, parts.right, EntryKind.GOG)
        carrier = _positioned(
            statement, 1, lambda: Graph(tuple(parts.vertices), tuple(parts.edges))
        )
        objects = list(carrier.vertices) + carrier.geometric_edges()
        for x in objects:
            for label, mapping, gog in (("lambda", parts.lam, left), ("rho", parts.rho, right)):
                if x not in mapping:
                    raise statement.error(f"{label} has no image for {x!r}")
                if not gog.graph.has_object(mapping[x]):
                    raise statement.error(
                        f"{label} image {mapping[x]!r} of {x!r} is not in {gog.name or 'the graph'}"
                    )
            if x not in parts.bisets:
                raise statement.error(f"No biset for {x!r}")
        bisets: dict[str, Biset] = {}
        for x in objects:
            line = parts.bisets[x]
            bisets[x] = self._inline_biset(
                line, left.group(parts.lam[x]), right.group(parts.rho[x]), x
            )
        minus: dict[str, tuple[Element, ...]] = {}
        for x, line in parts.minus.items():
            if carrier.is_vertex(x) or not carrier.has_object(x):
                raise line.error(f"{x!r} is not an oriented carrier edge", 1)
            origin = as_wreath(bisets[carrier.origin(x)])
            minus[x] = _positioned(
                line, 3, parse_elements, line.rest(3), origin.left_group, origin.basis
            )
        reverse: dict[str, tuple[Element, ...]] = {}
        for x, line in parts.reverse.items():
            if carrier.is_vertex(x) or not carrier.has_object(x) or x != geometric_name(x):
                raise line.error(f"{x!r} is not a carrier edge", 1)
            own = as_wreath(bisets[x])
            reverse[x] = _positioned(
                line, 3, parse_elements, line.rest(3), own.left_group, own.basis
            )

        builder = GobBuilder(left, right, name)
        for z in carrier.vertices:
            builder.vertex(z, parts.lam[z], parts.rho[z], bisets[z])
        for edge in carrier.edges:
            e = edge.name
            builder.edge(
                e,
                edge.origin,
                edge.terminus,
                parts.lam[e],
                parts.rho[e],
                bisets[e],
                minus=minus.get(e),
                plus=minus.get(f"~{e}"),
                reverse=reverse.get(e),
            )
        return builder.provenance(parts.provenance).build()

    def _inline_biset(
        self, line: Statement, left: FpGroup, right: FpGroup, name: str
    ) -> Biset:
        kind = line.expect(3, "biset kind")
        if kind == "wreath":
            return self.wreath_body(line, left, right, name)
        if kind == "table":
            return self.table_body(line, left, right, name)
        if kind == "ref":
            return self.resolve(line, 4, line.expect(4, "biset name"), EntryKind.BISET)
        match = CYCLIC_SPEC_RE.fullmatch(line.rest(3))
        if match is None:
            raise line.error("Expected cyclic(...), wreath { }, table { } or ref NAME", 3)
        args = {}
        for chunk in match.group("args").split(","):
            key, _, value = chunk.partition("=")
            args[key.strip()] = value.strip()
        if "d" not in args:
            raise line.error("cyclic(...) needs d=DEGREE", 3)
        right_action = args.get("right", "active")
        if right_action not in ("active", "trivial"):
            raise line.error("right= must be 'active' or 'trivial'", 3)
        biset = _positioned(
            line,
            3,
            lambda: CyclicBiset(left, right, int(args["d"]), right_action == "trivial", name=name),
        )
        if "n" in args and _positioned(line, 3, lambda: parse_order(args["n"])) != biset.left_order:
            raise line.error(f"n={args['n']} differs from the order of {left}", 3)
        return biset

    def _tree(self, statement: Statement, name: str) -> HubbardTree:
        vertices: list[str] = []
        edges: list[Edge] = []
        orders: dict[str, int] = {}
        angles: list[tuple[Statement, str, str, Fraction]] = []
        for line in statement.block or []:
            if line.keyword == "vertex":
                vertex = line.expect(1, "vertex name")
                vertices.append(vertex)
                options = _options(line, 2, frozenset({"ord"}))
                if "ord" in options:
                    text, index = options["ord"]
                    orders[vertex] = _positioned(line, index, parse_order, text)
            elif line.keyword == "edge":
                words = line.words()
                if len(words) != 4:
                    raise line.error("Expected 'edge NAME ORIGIN TERMINUS'")
                edges.append(Edge(words[1], words[2], words[3]))
            elif line.keyword == "angle":
                words = line.words()
                if len(words) != 4:
                    raise line.error("Expected 'angle VERTEX EDGE VALUE'")
                value = _positioned(line, 3, parse_angle, words[3])
                angles.append((line, words[1], words[2], value))
            else:
                raise line.error(f"Unknown tree statement {line.keyword!r}")
        tree = _positioned(statement, 0, lambda: Graph(tuple(vertices), tuple(edges)))
        oriented: dict[str, Fraction] = {}
        for line, vertex, edge_name, value in angles:
            edge = _positioned(line, 2, tree.edge, edge_name)
            if vertex == edge.origin:
                oriented[edge.name] = value
            elif vertex == edge.terminus:
                oriented[f"~{edge.name}"] = value
            else:
                raise line.error(f"{vertex!r} is not an endpoint of {edge_name!r}", 1)
        return HubbardTree(tree, oriented, orders, name)

    def _htree(self, statement: Statement) -> ParsedEntry:
        name = statement.tokens[1].text
        if statement.block is None:
            raise statement.error("Expected a '{ ... }' block")
        trees: dict[str, HubbardTree] = {}
        maps: dict[str, dict[str, str]] = {"p": {}, "lam": {}}
        deg: dict[str, int] = {}
        embed: dict[str, str] = {}
        for line in statement.block:
            if line.keyword in ("base", "cover"):
                if line.block is None:
                    raise line.error(f"Expected '{line.keyword} {{ ... }}'")
                trees[line.keyword] = self._tree(line, line.rest(1) or name)
            elif line.keyword == "map":
                which = line.expect(1, "'p' or 'lam'")
                if which not in maps:
                    raise line.error("Expected 'map p ...' or 'map lam ...'", 1)
                source, target = _arrow(line, 2)
                maps[which][source] = target
            elif line.keyword == "deg":
                vertex = line.expect(1, "vertex")
                deg[vertex] = _positioned(line, 2, int, line.expect(2, "degree"))
            elif line.keyword == "embed":
                source, target = _arrow(line, 1)
                embed[source] = target
            else:
                raise line.error(f"Unknown htree statement {line.keyword!r}")
        for part in ("base", "cover"):
            if part not in trees:
                raise statement.error(f"htree {name} has no {part} tree")
        bundle = HubbardBundle(
            trees["base"], trees["cover"], maps["p"], maps["lam"], deg, embed, name
        )
        return ParsedEntry(name, EntryKind.HTREE, bundle, statement.line)


def read_document(
    text: str, source: str = "<string>", lookup: Lookup | None = None
) -> list[ParsedEntry]:
    """Parse every entry of a document.

    Raises:
        ParseError: with the line and column of the first offending token.
    """
    return DocumentReader(source, lookup).read(text)


def read_entry(text: str, kind: EntryKind, source: str = "<string>") -> Any:
    """Parse a document holding entries of which the last has ``kind``; return its value."""
    entries = read_document(text, source)
    if not entries or entries[-1].kind is not kind:
        raise ParseError(f"Expected a {kind.value} entry", 1, 1, source)
    return entries[-1].value
