"""
Mating and tuning of graphs of bisets.

Both constructions glue a polynomial biset ``B(q)`` to a regular cyclic
biset along the circle at infinity. For a peripheral word ``w`` of the
right group, the wreath image of ``w`` must be a single ``d``-cycle

    s_{i_0} * w = h_0 * s_{i_1},  ...,  s_{i_{d-1}} * w = h_{d-1} * s_{i_0}

whose decorations multiply to the left peripheral word. The congruence from
the regular cyclic biset then sends ``j/d`` to ``(h_0 ... h_{j-1}) * s_{i_j}``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..algebra import INFINITE, FpGroup, Homomorphism, Word, word_order
from ..bisets import CyclicBiset, DecoratedPermutation, WreathBiset, as_wreath, cyclic_group
from ..bisets.congruence import Element
from ..errors import StructureError
from ..gob import GobBuilder, GraphOfBisets, validate_gob
from ..graphs import EdgeSpec, GraphOfGroups
from ..logging import logger

EDGE_GENERATOR = "c"


@dataclass(frozen=True)
class Peripheral:
    """A polynomial biset with its loop around infinity."""

    biset: WreathBiset
    word: Word
    name: str = ""


def peripheral_congruence(
    biset: WreathBiset, left_word: Word, right_word: Word
) -> tuple[Element, ...]:
    """Images of the regular cyclic basis ``0, 1/d, ...`` in ``biset``.

    Raises:
        StructureError: if ``right_word`` does not act as one ``d``-cycle
            whose decorations multiply to ``left_word`` from some start.
    """
    if word_order(right_word) != INFINITE or word_order(left_word) != INFINITE:
        raise StructureError(
            f"Peripheral words {left_word} and {right_word} must have infinite order"
        )
    entry = biset.image(right_word)
    d = biset.degree
    cycles = entry.orbits()
    if len(cycles) != 1:
        raise StructureError(
            f"{right_word} acts on the basis of {biset.name or 'the biset'} as {entry}, "
            f"not as a {d}-cycle"
        )
    for start in range(d):
        images: list[Element] = []
        decoration = biset.left_group.identity()
        point = start
        for _ in range(d):
            images.append((decoration, point))
            decoration = decoration * entry.decorations[point]
            point = entry.perm[point]
        if decoration == left_word:
            logger.debug(f"peripheral_congruence: start {start} for {right_word} in {biset.name}")
            return tuple(images)
    raise StructureError(
        f"No start of the {d}-cycle of {right_word} has decoration product {left_word}"
    )


def mating(first: Peripheral, second: Peripheral, degree: int | None = None) -> GraphOfBisets:
    """Formal mating: two vertices ``P``, ``Q`` joined by one edge with group ``Z``.

    Raises:
        StructureError: on mismatched degrees or failed peripheral validation.
    """
    for part in (first, second):
        if part.biset.left_group != part.biset.right_group:
            raise StructureError(f"{part.name or 'biset'} is not a self-biset")
    d = degree if degree is not None else first.biset.degree
    if first.biset.degree != d or second.biset.degree != d:
        raise StructureError(
            f"Cannot mate bisets of degrees {first.biset.degree} and {second.biset.degree} "
            f"in degree {d}"
        )
    minus = peripheral_congruence(first.biset, first.word, first.word)
    plus = peripheral_congruence(second.biset, second.word, second.word)

    edge_group = cyclic_group(INFINITE, EDGE_GENERATOR)
    p_name, q_name = first.name or "P", second.name or "Q"
    gog = GraphOfGroups.build(
        {p_name: first.biset.left_group, q_name: second.biset.left_group},
        [
            EdgeSpec(
                "e",
                p_name,
                q_name,
                edge_group,
                {EDGE_GENERATOR: first.word},
                {EDGE_GENERATOR: second.word},
            )
        ],
        name=f"{p_name}+{q_name}",
    )
    circle = CyclicBiset(edge_group, edge_group, d, name="circle")
    gob = (
        GobBuilder(gog, gog, name=f"{p_name}_mate_{q_name}")
        .vertex(p_name, p_name, p_name, first.biset)
        .vertex(q_name, q_name, q_name, second.biset)
        .edge("e", p_name, q_name, "e", "e", circle, minus=minus, plus=plus)
        .build()
    )
    logger.info(f"mating: {p_name} and {q_name} glued in degree {d}")
    return gob


@dataclass(frozen=True)
class TuningSlot:
    """Replacement at one cycle vertex: ``B(q_i)`` and the loops around infinity.

    ``images`` optionally gives the congruence ``beta_i`` from the regular
    cyclic biset; when it is omitted it is derived from the peripheral cycle.
    """

    biset: WreathBiset
    left_word: Word
    right_word: Word
    images: tuple[Element, ...] | None = None


def _is_passive(gob: GraphOfBisets, z: str) -> bool:
    wreath = gob.wreath(z)
    return wreath.degree == 1 and all(entry.is_identity() for entry in wreath.recursion)


def _check_tuning(gob: GraphOfBisets, cycle: Sequence[str], slots: Sequence[TuningSlot]) -> None:
    if not cycle or len(cycle) != len(slots):
        raise StructureError("Tuning needs one replacement per cycle vertex")
    targets = set()
    for i, z in enumerate(cycle):
        if not gob.carrier.is_vertex(z):
            raise StructureError(f"{z!r} is not a carrier vertex")
        biset = gob.bisets[z]
        if not isinstance(biset, CyclicBiset) or biset.right_trivial:
            raise StructureError(f"{z} does not carry a right-active cyclic biset")
        if biset.left_order != INFINITE:
            raise StructureError(f"{z} has finite order {biset.left_order}")
        following = cycle[(i + 1) % len(cycle)]
        if gob.rho(z) != gob.lam(following):
            raise StructureError(
                f"{z} maps to {gob.rho(z)}, not to the next cycle vertex {following}"
            )
        slot = slots[i]
        if slot.biset.degree != biset.degree:
            raise StructureError(
                f"Replacement at {z} has degree {slot.biset.degree}, "
                f"the cycle vertex {biset.degree}"
            )
        if slot.biset.right_group != slots[(i + 1) % len(slots)].biset.left_group:
            raise StructureError(f"Replacement at {z} does not chain into the next one")
        targets.add(gob.rho(z))
    for z in gob.carrier.vertices:
        if z not in cycle and gob.rho(z) in targets and not _is_passive(gob, z):
            raise StructureError(
                f"{z} is critical or essential and maps into the cycle at {gob.rho(z)}"
            )


def _replace_vertex_group(gog: GraphOfGroups, replacements: dict[str, FpGroup]) -> GraphOfGroups:
    """Swap vertex groups; edge maps into replaced vertices must be trivial."""
    into_minus = dict(gog.into_minus)
    into_plus = dict(gog.into_plus)
    for edge in gog.graph.edges:
        for maps, end in ((into_minus, edge.origin), (into_plus, edge.terminus)):
            if end not in replacements:
                continue
            hom = maps[edge.name]
            if any(not image.is_identity() for image in hom.images):
                raise StructureError(f"Edge {edge.name} has a nontrivial group at {end}")
            maps[edge.name] = Homomorphism.trivial(hom.source, replacements[end])
    return GraphOfGroups(
        gog.graph,
        {**gog.vertex_groups, **replacements},
        dict(gog.edge_groups),
        into_minus,
        into_plus,
        dict(gog.labels),
        gog.name,
    )


def tuning(gob: GraphOfBisets, cycle: Sequence[str], slots: Sequence[TuningSlot]) -> GraphOfBisets:
    """Replace the regular cyclic bisets on a periodic cycle by polynomial bisets.

    Vertex groups ``G_{lam(z_i)}`` become the groups of the replacements
    through ``phi_i(t) = left_word``; bisets in ``lam^{-1}(z_i)`` are induced
    along ``phi_i``; vertices over the next cycle vertex get a trivial
    right action; congruences into ``z_i`` go through ``beta_i``.

    Raises:
        StructureError: on a failed precondition or an inconsistent result.
    """
    if gob.left != gob.right:
        raise StructureError("Tuning needs a self graph of bisets")
    _check_tuning(gob, cycle, slots)
    groups: dict[str, FpGroup] = {}
    phis: dict[str, Homomorphism] = {}
    betas: dict[str, tuple[Element, ...]] = {}
    for z, slot in zip(cycle, slots):
        vertex = gob.lam(z)
        old = gob.left.group(vertex)
        groups[vertex] = slot.biset.left_group
        phis[vertex] = Homomorphism(old, slot.biset.left_group, (slot.left_word,))
        betas[z] = (
            slot.images
            if slot.images is not None
            else peripheral_congruence(slot.biset, slot.left_word, slot.right_word)
        )
    gog = _replace_vertex_group(gob.left, groups)
    replaced = {z: slot.biset for z, slot in zip(cycle, slots)}

    def lift(vertex: str, element: Element) -> Element:
        word, index = element
        return (phis[vertex](word) if vertex in phis else word, index)

    builder = GobBuilder(gog, gog, name=f"{gob.name}~tuned" if gob.name else "")
    for key in gob.carrier.vertices + tuple(gob.carrier.geometric_edges()):
        if key in replaced:
            biset = replaced[key]
        else:
            lam = gob.lam(key)
            biset = _rewired(gob.wreath(key), gog, lam, gob.rho(key), phis.get(lam))
        if gob.carrier.is_vertex(key):
            builder.vertex(key, gob.lam(key), gob.rho(key), biset)
            continue
        edge = gob.carrier.edge(key)
        images = {}
        for x in (key, gob.carrier.reverse(key)):
            origin = gob.carrier.origin(x)
            if origin in betas:
                images[x] = tuple(
                    _through(betas[origin], phis[gob.lam(origin)], element)
                    for element in gob.minus_images(x)
                )
            else:
                images[x] = tuple(lift(gob.lam(origin), e) for e in gob.minus_images(x))
        builder.edge(
            key,
            edge.origin,
            edge.terminus,
            gob.lam(key),
            gob.rho(key),
            biset,
            minus=images[key],
            plus=images[gob.carrier.reverse(key)],
            reverse=tuple(lift(gob.lam(key), e) for e in gob.reverse_images(key)),
        )
    tuned = builder.provenance(dict(gob.carrier.provenance)).build()
    report = validate_gob(tuned)
    if not report.valid:
        first = report.violations[0]
        raise StructureError(
            f"Tuned graph of bisets is inconsistent: "
            f"[{first.code}] {first.subject}: {first.message}"
        )
    logger.info(f"tuning: replaced {len(cycle)} cycle bisets of {gob.name or 'gob'}")
    return tuned


def _rewired(
    wreath: WreathBiset,
    gog: GraphOfGroups,
    lam: str,
    rho: str,
    phi: Homomorphism | None,
) -> WreathBiset:
    """``G_i (x) B_z`` on the left and, over a replaced group, a trivial right action."""
    left = gog.group(lam)
    right = gog.group(rho)
    if phi is None and wreath.right_group == right:
        return wreath
    entries = wreath.recursion
    if phi is not None:
        entries = tuple(entry.map_decorations(phi) for entry in entries)
    if wreath.right_group != right:
        if any(not entry.is_identity() for entry in wreath.recursion):
            raise StructureError(f"{wreath.name or 'biset'} over a replaced group is not passive")
        identity = DecoratedPermutation.identity(left, wreath.degree)
        entries = tuple(identity for _ in range(right.rank))
    return WreathBiset(left, right, wreath.degree, entries, wreath.basis, wreath.name)


def _through(beta: tuple[Element, ...], phi: Homomorphism, element: Element) -> Element:
    """``beta(k * s_j) = phi(k) * beta(s_j)`` in the replacement biset."""
    word, index = element
    image, position = beta[index]
    return (phi(word) * image, position)


def identity_slots(gob: GraphOfBisets, cycle: Sequence[str]) -> list[TuningSlot]:
    """Slots that put the regular cyclic bisets back (tuning by ``z**deg``)."""
    slots = []
    for z in cycle:
        biset = gob.bisets[z]
        if not isinstance(biset, CyclicBiset):
            raise StructureError(f"{z} does not carry a cyclic biset")
        wreath = as_wreath(biset)
        slots.append(
            TuningSlot(
                wreath,
                biset.left_group.generator(0),
                biset.right_group.generator(0),
            )
        )
    return slots
