"""Graphs, graphs of groups, decorated paths and fundamental group presentations."""

from .gog import EdgeSpec, GraphOfGroups
from .graph import Edge, Graph, geometric_name, reverse_name
from .morphism import GraphMorphism
from .operations import (
    add_edge,
    barycentric_subdivision,
    split_edge,
    subdivide_path,
    subdivided_tree,
    subdivision_vertex,
)
from .paths import PathWord, reduce_path
from .presentation import Pi1Presentation, bfs_tree, pi1_presentation, tree_paths

__all__ = [
    "Edge",
    "EdgeSpec",
    "Graph",
    "GraphMorphism",
    "GraphOfGroups",
    "PathWord",
    "Pi1Presentation",
    "add_edge",
    "barycentric_subdivision",
    "bfs_tree",
    "geometric_name",
    "pi1_presentation",
    "reduce_path",
    "reverse_name",
    "split_edge",
    "subdivide_path",
    "subdivided_tree",
    "subdivision_vertex",
    "tree_paths",
]
