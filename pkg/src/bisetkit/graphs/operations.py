"""
Operations on graphs of groups that preserve the fundamental group.

Splitting a geometric edge ``e`` inserts a vertex ``[e]`` carrying ``G_e``
and replaces ``e`` by two halves:

    e-  : e^-  -> [e]   (keeps the old map into G_{e^-}, identity into G_[e])
    e+  : [e]  -> e^+   (identity from G_[e], keeps the old map into G_{e^+})

so ``rev(e-) = ~e-`` runs ``[e] -> e^-``. Barycentric subdivision splits every
edge. Adding an edge attaches a new vertex with group ``H = <h>`` to a vertex
``v`` along an edge with group ``H``. The ``provenance`` of the new graph maps
each new object to the object it came from.
"""

from __future__ import annotations

from collections.abc import Iterable

from ..algebra import FpGroup, Homomorphism, Word, word_order
from .gog import GraphOfGroups
from .graph import Edge, Graph, geometric_name
from .paths import PathWord


def subdivision_vertex(edge: str) -> str:
    return f"[{geometric_name(edge)}]"


def _split(gog: GraphOfGroups, names: set[str]) -> GraphOfGroups:
    graph = gog.graph
    vertices = list(graph.vertices)
    provenance = {v: v for v in graph.vertices}
    vertex_groups = dict(gog.vertex_groups)
    edges: list[Edge] = []
    edge_groups: dict[str, FpGroup] = {}
    minus: dict[str, Homomorphism] = {}
    plus: dict[str, Homomorphism] = {}
    labels: dict[str, str] = {}
    for edge in graph.edges:
        group = gog.edge_groups[edge.name]
        if edge.name not in names:
            edges.append(edge)
            edge_groups[edge.name] = group
            minus[edge.name] = gog.into_minus[edge.name]
            plus[edge.name] = gog.into_plus[edge.name]
            if edge.name in gog.labels:
                labels[edge.name] = gog.labels[edge.name]
            provenance[edge.name] = edge.name
            provenance[f"~{edge.name}"] = f"~{edge.name}"
            continue
        middle = subdivision_vertex(edge.name)
        vertices.append(middle)
        vertex_groups[middle] = group
        provenance[middle] = edge.name
        identity = Homomorphism.identity(group)
        for half, origin, terminus, into_minus, into_plus in (
            (f"{edge.name}-", edge.origin, middle, gog.into_minus[edge.name], identity),
            (f"{edge.name}+", middle, edge.terminus, identity, gog.into_plus[edge.name]),
        ):
            edges.append(Edge(half, origin, terminus))
            edge_groups[half] = group
            minus[half] = into_minus
            plus[half] = into_plus
            labels[half] = gog.label(edge.name)
            provenance[half] = edge.name
            provenance[f"~{half}"] = f"~{edge.name}"
    new_graph = Graph(tuple(vertices), tuple(edges), provenance)
    return GraphOfGroups(new_graph, vertex_groups, edge_groups, minus, plus, labels, gog.name)


def split_edge(gog: GraphOfGroups, edge: str) -> GraphOfGroups:
    return _split(gog, {gog.graph.edge(edge).name})


def barycentric_subdivision(gog: GraphOfGroups) -> GraphOfGroups:
    return _split(gog, set(gog.graph.geometric_edges()))


def add_edge(
    gog: GraphOfGroups,
    vertex: str,
    generator: Word,
    vertex_name: str | None = None,
    edge_name: str | None = None,
) -> GraphOfGroups:
    """Attach ``vertex_name`` with group ``<generator>`` to ``vertex``."""
    graph = gog.graph
    if not graph.is_vertex(vertex):
        raise ValueError(f"Unknown vertex {vertex!r}")
    if generator.group != gog.vertex_groups[vertex]:
        raise ValueError(f"{generator} is not in the group of {vertex}")
    vertex_name = vertex_name or f"{vertex}'"
    edge_name = edge_name or f"{vertex}_to_{vertex_name}"
    if graph.has_object(vertex_name) or graph.has_object(edge_name):
        raise ValueError(f"Object name {vertex_name!r} or {edge_name!r} is already used")
    if generator.is_identity():
        group = FpGroup.trivial()
    else:
        group = FpGroup.free_product([word_order(generator)], ["h"])
    provenance = {x: x for x in graph.objects()}
    provenance.update({vertex_name: vertex, edge_name: vertex, f"~{edge_name}": vertex})
    new_graph = Graph(
        graph.vertices + (vertex_name,),
        graph.edges + (Edge(edge_name, vertex, vertex_name),),
        provenance,
    )
    images = (generator,) if group.rank else ()
    return GraphOfGroups(
        new_graph,
        {**gog.vertex_groups, vertex_name: group},
        {**gog.edge_groups, edge_name: group},
        {**gog.into_minus, edge_name: Homomorphism(group, gog.vertex_groups[vertex], images)},
        {**gog.into_plus, edge_name: Homomorphism.identity(group)},
        dict(gog.labels),
        gog.name,
    )


def subdivide_path(path: PathWord, subdivided: GraphOfGroups) -> PathWord:
    """Transport a path of the original graph into a (partially) subdivided one."""
    items: list[str | Word] = [path.head]
    for x, g in path.steps:
        name = geometric_name(x)
        if subdivided.graph.has_object(name):
            items.append(x)
        elif x == name:
            items.extend([f"{name}-", f"{name}+"])
        else:
            items.extend([f"~{name}+", f"~{name}-"])
        items.append(g)
    return PathWord.from_sequence(subdivided, path.start, items)


def subdivided_tree(gog: GraphOfGroups, tree: Iterable[str]) -> frozenset[str]:
    """Spanning tree of the subdivision inducing the same stable letters as ``tree``.

    Both halves of tree edges are kept, plus the ``e-`` half of every other
    edge, so each stable letter sits on an ``e+`` half.
    """
    tree = set(tree)
    result = set()
    for name in gog.graph.geometric_edges():
        result.add(f"{name}-")
        if name in tree:
            result.add(f"{name}+")
    return frozenset(result)
