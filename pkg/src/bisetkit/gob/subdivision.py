"""
Barycentric subdivision of graphs of bisets.

The carrier, ``Y`` and ``X`` are subdivided together: every carrier edge
``e`` becomes a vertex ``[e]`` and two halves ``e-``, ``e+``, all three
carrying ``B_e``. The congruences of the halves are

    e-  : ()^- is the old ()^- of e,   ()^+ is the identity onto B_[e]
    e+  : ()^- is the identity onto B_[e],   ()^+ is the old ()^+ of e

so the old reversal is absorbed into ``e+``.
"""

from __future__ import annotations

from ..graphs import Graph, barycentric_subdivision, geometric_name, subdivision_vertex
from ..logging import logger
from .model import GobBuilder, GraphOfBisets


def _halves(x: str) -> tuple[str, str]:
    """The two halves of an oriented edge in the subdivision, in travel order."""
    name = geometric_name(x)
    if x == name:
        return f"{name}-", f"{name}+"
    return f"~{name}+", f"~{name}-"


def _image_of_middle(graph: Graph, y: str) -> str:
    return y if graph.is_vertex(y) else subdivision_vertex(y)


def _image_of_half(graph: Graph, y: str, which: int) -> str:
    return y if graph.is_vertex(y) else _halves(y)[which]


def gob_barycentric(gob: GraphOfBisets) -> GraphOfBisets:
    left = barycentric_subdivision(gob.left)
    right = barycentric_subdivision(gob.right)
    builder = GobBuilder(left, right, name=gob.name)
    ly, rx = gob.left.graph, gob.right.graph
    carrier = gob.carrier
    provenance: dict[str, str] = {}
    for v in carrier.vertices:
        builder.vertex(v, gob.lam(v), gob.rho(v), gob.bisets[v])
        provenance[v] = v
    for edge in carrier.edges:
        e = edge.name
        middle = subdivision_vertex(e)
        lam, rho = gob.lam(e), gob.rho(e)
        biset = gob.bisets[e]
        identity = tuple((gob.wreath(e).left_group.identity(), i) for i in range(gob.degree(e)))
        builder.vertex(middle, _image_of_middle(ly, lam), _image_of_middle(rx, rho), biset)
        builder.edge(
            f"{e}-",
            edge.origin,
            middle,
            _image_of_half(ly, lam, 0),
            _image_of_half(rx, rho, 0),
            biset,
            minus=gob.minus_images(e),
            plus=identity,
        )
        builder.edge(
            f"{e}+",
            middle,
            edge.terminus,
            _image_of_half(ly, lam, 1),
            _image_of_half(rx, rho, 1),
            biset,
            minus=identity,
            plus=tuple(gob.to_terminus(e, j) for j in range(gob.degree(e))),
        )
        provenance.update({middle: e, f"{e}-": e, f"{e}+": e, f"~{e}-": f"~{e}", f"~{e}+": f"~{e}"})
    result = builder.provenance(provenance).build()
    logger.debug(
        f"gob_barycentric: {len(carrier.edges)} edges split, carrier now has "
        f"{len(result.carrier.vertices)} vertices and {len(result.carrier.edges)} edges"
    )
    return result
