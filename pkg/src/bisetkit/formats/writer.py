"""
Emitters for workspace documents.

Every emitter writes text that ``read_document`` parses back to an equal
structure. ``emit_entries`` writes the graphs of groups a graph of bisets
refers to ahead of it, so a single emitted gob is a self-contained document.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from ..algebra import FpGroup
from ..algebra.words import format_order
from ..bisets import Biset, CyclicBiset, TableBiset, WreathBiset, as_wreath
from ..dynamics import HubbardBundle, HubbardTree
from ..gob import GraphOfBisets
from ..graphs import GraphOfGroups
from .reader import EntryKind
from .values import format_elements, format_group

INDENT = "  "


def emit_group(name: str, group: FpGroup) -> str:
    return f"group {name} = {format_group(group)}"


def _wreath_lines(biset: WreathBiset) -> list[str]:
    return [f"basis {' '.join(biset.basis)}", *biset.lines()]


def _table_lines(biset: TableBiset) -> list[str]:
    lines = [f"elements {' '.join(biset.elements)}"]
    for side, group, tables in (
        ("left", biset.left_group, biset.left_table),
        ("right", biset.right_group, biset.right_table),
    ):
        for generator, table in zip(group.generator_names, tables):
            if table != tuple(range(biset.size)):
                images = " ".join(biset.elements[i] for i in table)
                lines.append(f"{side} {generator} = {images}")
    return lines


def _block(head: str, lines: Sequence[str], depth: int = 0) -> str:
    pad = INDENT * depth
    inner = "\n".join(f"{pad}{INDENT}{line}" for line in lines)
    return f"{pad}{head} {{\n{inner}\n{pad}}}"


def emit_biset(name: str, biset: Biset) -> str:
    signature = f"{name} : {format_group(biset.left_group)} <- {format_group(biset.right_group)}"
    if isinstance(biset, CyclicBiset):
        suffix = " trivial" if biset.right_trivial else ""
        return f"cyclic {signature} degree {biset.degree}{suffix}"
    if isinstance(biset, TableBiset):
        return _block(f"table {signature}", _table_lines(biset))
    return _block(f"biset {signature}", _wreath_lines(biset))


def _edge_images(gog: GraphOfGroups, edge: str, key: str) -> str:
    hom = (gog.into_minus if key == "into_minus" else gog.into_plus)[edge]
    if all(image.is_identity() for image in hom.images):
        return ""
    if hom.source.rank == 1:
        return f" {key} {hom.images[0]}"
    pairs = ",".join(
        f"{g}={image}" for g, image in zip(hom.source.generator_names, hom.images)
    )
    return f" {key} {pairs}"


def emit_gog(name: str, gog: GraphOfGroups) -> str:
    lines = [
        f"vertex {v} group {format_group(gog.vertex_groups[v])}" for v in gog.graph.vertices
    ]
    for edge in gog.graph.edges:
        line = f"edge {edge.name} from {edge.origin} to {edge.terminus}"
        group = gog.edge_groups[edge.name]
        if group.factors:
            line += f" group {format_group(group)}"
        line += _edge_images(gog, edge.name, "into_minus")
        line += _edge_images(gog, edge.name, "into_plus")
        if edge.name in gog.labels:
            line += f" label {gog.labels[edge.name]}"
        lines.append(line)
    lines.extend(f"provenance {x} -> {y}" for x, y in gog.graph.provenance.items())
    return _block(f"gog {name}", lines)


def _inline_biset(x: str, biset: Biset) -> list[str]:
    if isinstance(biset, CyclicBiset):
        n = format_order(biset.left_order)
        action = "trivial" if biset.right_trivial else "active"
        return [f"biset {x} = cyclic(n={n}, d={biset.degree}, right={action})"]
    if isinstance(biset, TableBiset):
        return _block(f"biset {x} = table", _table_lines(biset)).split("\n")
    return _block(f"biset {x} = wreath", _wreath_lines(biset)).split("\n")


def emit_gob(name: str, gob: GraphOfBisets, left: str, right: str) -> str:
    """Emit ``gob`` referring to its graphs of groups by the names ``left`` and ``right``."""
    carrier = gob.carrier
    objects = list(carrier.vertices) + carrier.geometric_edges()
    carrier_lines = [f"vertex {' '.join(carrier.vertices)}"] if carrier.vertices else []
    carrier_lines += [f"edge {e.name} from {e.origin} to {e.terminus}" for e in carrier.edges]
    carrier_lines += [f"provenance {x} -> {y}" for x, y in carrier.provenance.items()]
    lines = [f"left_graph {left}", f"right_graph {right}"]
    lines += _block("carrier", carrier_lines).split("\n")
    lines += _block("lambda", [f"{x} -> {gob.lam(x)}" for x in objects]).split("\n")
    lines += _block("rho", [f"{x} -> {gob.rho(x)}" for x in objects]).split("\n")
    for x in objects:
        lines += _inline_biset(x, gob.bisets[x])
    for x in carrier.oriented_edges():
        if x in gob.minus:
            origin = gob.wreath(carrier.origin(x))
            lines.append(f"minus {x} -> {format_elements(gob.minus[x], origin.basis)}")
    for e, images in gob.reverse.items():
        lines.append(f"reverse {e} -> {format_elements(images, gob.wreath(e).basis)}")
    return _block(f"gob {name}", lines)


def _tree_lines(tree: HubbardTree) -> list[str]:
    lines = []
    for v in tree.tree.vertices:
        order = f" ord {format_order(tree.ord[v])}" if v in tree.ord else ""
        lines.append(f"vertex {v}{order}")
    lines += [f"edge {e.name} {e.origin} {e.terminus}" for e in tree.tree.edges]
    for x, angle in tree.angles.items():
        lines.append(
            f"angle {tree.tree.origin(x)} {tree.tree.edge(x).name} {Fraction(angle)}"
        )
    return lines


def emit_htree(name: str, bundle: HubbardBundle) -> str:
    lines = _block("base", _tree_lines(bundle.base)).split("\n")
    lines += _block("cover", _tree_lines(bundle.cover)).split("\n")
    lines += [f"map p {x} -> {y}" for x, y in bundle.p.items()]
    lines += [f"map lam {x} -> {y}" for x, y in bundle.lam.items()]
    lines += [f"deg {z} {d}" for z, d in bundle.deg.items()]
    lines += [f"embed {v} -> {z}" for v, z in bundle.embed.items()]
    return _block(f"htree {name}", lines)


def _graph_names(
    name: str, gob: GraphOfBisets, taken: set[str], known: dict[str, GraphOfGroups]
) -> tuple[str, str]:
    def pick(gog: GraphOfGroups, fallback: str) -> str:
        for existing, value in known.items():
            if value == gog:
                return existing
        candidate = gog.name if gog.name and gog.name not in taken else fallback
        while candidate in taken:
            candidate += "_"
        return candidate

    left = pick(gob.left, f"{name}_left")
    if gob.right is gob.left or gob.right == gob.left:
        return left, left
    taken = taken | {left}
    return left, pick(gob.right, f"{name}_right")


def emit_entries(entries: Iterable[tuple[str, EntryKind, object]]) -> str:
    """Emit a document; gobs are preceded by the graphs of groups they use."""
    items = list(entries)
    taken = {name for name, _, _ in items}
    known: dict[str, GraphOfGroups] = {}
    chunks = []
    for name, kind, value in items:
        if kind is EntryKind.GROUP:
            assert isinstance(value, FpGroup)
            chunks.append(emit_group(name, value))
        elif kind is EntryKind.BISET:
            chunks.append(emit_biset(name, value))  # type: ignore[arg-type]
        elif kind is EntryKind.GOG:
            assert isinstance(value, GraphOfGroups)
            known[name] = value
            chunks.append(emit_gog(name, value))
        elif kind is EntryKind.GOB:
            assert isinstance(value, GraphOfBisets)
            left, right = _graph_names(name, value, taken, known)
            taken |= {left, right}
            for gog_name, gog in ((left, value.left), (right, value.right)):
                if gog_name not in known:
                    known[gog_name] = gog
                    chunks.append(emit_gog(gog_name, gog))
            chunks.append(emit_gob(name, value, left, right))
        else:
            assert isinstance(value, HubbardBundle)
            chunks.append(emit_htree(name, value))
    return "\n\n".join(chunks) + "\n"


def emit_wreath_table(biset: Biset) -> str:
    """The recursion of ``biset`` as ``g = <...>(...)`` lines."""
    return str(as_wreath(biset))
