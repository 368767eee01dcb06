"""
Graphs of cyclic bisets from Hubbard tree bundles.

The carrier is the barycentric subdivision of ``HT1`` and both graphs of
groups are the subdivision of ``HT``, with ``G_v = Z/ord(v)`` at vertices
of ``HT`` and trivial groups elsewhere. Every vertex ``z`` of ``HT1`` carries
the cyclic biset ``((1/deg_z) Z) / ord(lam(z))``, right-active exactly when
``z`` is essential or critical. Edges of ``HT1`` carry degree-one bisets
with trivial right action, copied onto ``[e]`` and both halves.

The congruence of an edge ``x`` into an active vertex ``z`` sends the basis
element to the grid point of ``B_z`` at or below ``D_x``: the element
``(t - a_z) / deg_z`` sits at angle ``t``, so ``t = floor(deg_z * D_x + a_z)``.
At passive vertices the congruence is the natural identification.
"""

from __future__ import annotations

from fractions import Fraction

from ..algebra import FpGroup
from ..bisets import CyclicBiset, cyclic_group
from ..bisets.congruence import Element
from ..errors import StructureError
from ..gob import GobBuilder, GraphOfBisets
from ..graphs import EdgeSpec, GraphOfGroups, barycentric_subdivision, subdivision_vertex
from ..logging import logger
from .hubbard import HubbardBundle, boundary_offsets, derive_ord, rounded_index, validate_bundle


def hubbard_graph_of_groups(
    bundle: HubbardBundle, orders: dict[str, int] | None = None
) -> GraphOfGroups:
    """The subdivided graph of groups of ``HT``; vertex generators are named after the vertex."""
    orders = orders if orders is not None else derive_ord(bundle)
    tree = bundle.base.tree
    groups: dict[str, FpGroup] = {v: cyclic_group(orders[v], v) for v in tree.vertices}
    edges = [EdgeSpec(e.name, e.origin, e.terminus) for e in tree.edges]
    gog = GraphOfGroups.build(groups, edges, name=bundle.base.name or bundle.name)
    return barycentric_subdivision(gog)


def _sd(gog: GraphOfGroups, image: str) -> str:
    """Vertex of the subdivision standing for a vertex or an edge of ``HT``."""
    return image if gog.graph.is_vertex(image) else subdivision_vertex(image)


def _half(gog: GraphOfGroups, start: str, end: str) -> str:
    """The object of the subdivision joining two of its vertices (a vertex if they agree)."""
    if start == end:
        return start
    between = gog.graph.oriented_between(start, end)
    if len(between) != 1:
        raise StructureError(f"{start} and {end} are not adjacent in the subdivided tree")
    return between[0]


def hubbard_to_gob(bundle: HubbardBundle) -> GraphOfBisets:
    """Compile a valid bundle into a graph of cyclic bisets.

    Raises:
        StructureError: if the bundle fails validation.
    """
    report = validate_bundle(bundle)
    if not report.valid:
        first = report.violations[0]
        raise StructureError(
            f"Invalid Hubbard bundle: [{first.code}] {first.subject}: {first.message}"
        )
    orders = derive_ord(bundle)
    offsets = boundary_offsets(bundle)
    gog = hubbard_graph_of_groups(bundle, orders)
    cover = bundle.cover
    dynamics = bundle.dynamics()
    builder = GobBuilder(gog, gog, name=bundle.name)

    bisets: dict[str, CyclicBiset] = {}
    for z in cover.tree.vertices:
        lam = _sd(gog, bundle.retract(z))
        rho = dynamics(z)
        bisets[z] = CyclicBiset(
            gog.group(lam),
            gog.group(rho),
            bundle.degree_at(z),
            right_trivial=not bundle.is_active(z),
            name=z,
        )
        builder.vertex(z, lam, rho, bisets[z])

    def into_vertex(z: str, x: str) -> tuple[Element, ...]:
        biset = bisets[z]
        if not bundle.is_active(z):
            return ((biset.left_group.identity(), 0),)
        offset = offsets[z] or Fraction(0)
        t = rounded_index(cover.angle(x), offset, biset.degree)
        return (biset.locate(Fraction(t, biset.degree)),)

    provenance: dict[str, str] = {z: z for z in cover.tree.vertices}
    for edge in cover.tree.edges:
        e = edge.name
        middle = subdivision_vertex(e)
        lam = _sd(gog, bundle.retract(e))
        rho = subdivision_vertex(dynamics(e))
        biset = CyclicBiset(gog.group(lam), gog.group(rho), 1, right_trivial=True, name=e)
        builder.vertex(middle, lam, rho, biset)
        identity = ((biset.left_group.identity(), 0),)
        lam_ends = [_sd(gog, bundle.retract(end)) for end in (edge.origin, edge.terminus)]
        rho_ends = [dynamics(edge.origin), dynamics(edge.terminus)]
        builder.edge(
            f"{e}-",
            edge.origin,
            middle,
            _half(gog, lam_ends[0], lam),
            _half(gog, rho_ends[0], rho),
            biset,
            minus=into_vertex(edge.origin, e),
            plus=identity,
        )
        builder.edge(
            f"{e}+",
            middle,
            edge.terminus,
            _half(gog, lam, lam_ends[1]),
            _half(gog, rho, rho_ends[1]),
            biset,
            minus=identity,
            plus=into_vertex(edge.terminus, cover.tree.reverse(e)),
        )
        provenance.update({middle: e, f"{e}-": e, f"{e}+": e})
        provenance.update({f"~{e}-": f"~{e}", f"~{e}+": f"~{e}"})

    gob = builder.provenance(provenance).build()
    logger.debug(
        f"hubbard_to_gob: degree {bundle.total_degree()}, "
        f"{len(bundle.essential())} essential and {len(bundle.critical())} critical vertices"
    )
    return gob
