"""
Products of graphs of bisets.

The carrier of ``B (x)_X C`` is the fibre product ``{(b, c) : rho(b) = lam(c)}``
with ``(b, c)^- = (b^-, c^-)`` and ``rev(b, c) = (rev b, rev c)``; a pair is a
vertex exactly when both entries are vertices. Its biset is
``B_b (x) B_c`` with basis pairs at index ``s * deg(c) + t``. Congruences
act entrywise:

    (s (x) t)^- = k * s' (x) m * t'  =  k * (s' * m) (x) t'

where ``s' * m`` is computed in ``B_{b^-}``.
"""

from __future__ import annotations

from ..bisets import tensor
from ..bisets.congruence import Element
from ..errors import StructureError
from ..graphs import geometric_name, reverse_name
from ..logging import logger
from .model import GraphOfBisets, GobBuilder

SEPARATOR = "|"


def _pair(b: str, c: str) -> str:
    return f"{b}{SEPARATOR}{c}"


def _tensor_images(
    first: GraphOfBisets,
    b_images: tuple[Element, ...],
    b_target: str,
    c_images: tuple[Element, ...],
    c_degree: int,
) -> tuple[Element, ...]:
    """Entrywise image of the basis pairs under ``(beta_b, beta_c)``."""
    target = first.wreath(b_target)
    images = []
    for k, s in b_images:
        for m, t in c_images:
            h, s2 = target.act(s, m)
            images.append((k * h, s2 * c_degree + t))
    return tuple(images)


def gob_product(first: GraphOfBisets, second: GraphOfBisets) -> GraphOfBisets:
    """``first (x) second`` over the shared middle graph of groups.

    Raises:
        StructureError: if ``first.right`` differs from ``second.left``.
    """
    if first.right != second.left:
        raise StructureError(
            f"Cannot multiply graphs of bisets: right graph {first.right.name or '?'} of the "
            f"first differs from left graph {second.left.name or '?'} of the second"
        )
    builder = GobBuilder(first.left, second.right, name=_product_name(first, second))
    vertices = []
    for b in first.carrier.vertices:
        for c in second.carrier.vertices:
            if first.rho(b) == second.lam(c):
                vertices.append((b, c))
                builder.vertex(
                    _pair(b, c),
                    first.lam(b),
                    second.rho(c),
                    tensor(first.biset(b), second.biset(c)),
                )

    # Canonical orientation: the first edge entry is positive.
    pairs = []
    for b in first.carrier.objects():
        for c in second.carrier.objects():
            if first.carrier.is_vertex(b) and second.carrier.is_vertex(c):
                continue
            if first.rho(b) != second.lam(c):
                continue
            lead = c if first.carrier.is_vertex(b) else b
            if lead == geometric_name(lead):
                pairs.append((b, c))

    provenance: dict[str, str] = {}
    for b, c in pairs:
        name = _pair(b, c)
        reverse = (first.carrier.reverse(b), second.carrier.reverse(c))
        origins = (first.carrier.origin(b), second.carrier.origin(c))
        termini = (first.carrier.terminus(b), second.carrier.terminus(c))
        minus = _tensor_images(
            first,
            first.minus_images(b),
            origins[0],
            second.minus_images(c),
            second.degree(origins[1]),
        )
        plus = _tensor_images(
            first,
            first.minus_images(reverse[0]),
            termini[0],
            second.minus_images(reverse[1]),
            second.degree(termini[1]),
        )
        flip = _tensor_images(
            first,
            first.reverse_images(b),
            b,
            second.reverse_images(c),
            second.degree(c),
        )
        builder.edge(
            name,
            _pair(*origins),
            _pair(*termini),
            first.lam(b),
            second.rho(c),
            tensor(first.biset(b), second.biset(c)),
            minus=minus,
            plus=plus,
            reverse=flip,
        )
        provenance[name] = name
        provenance[reverse_name(name)] = _pair(*reverse)
    gob = builder.provenance(provenance).build()
    logger.debug(
        f"gob_product: {len(vertices)} vertices and {len(pairs)} edges in the fibre product"
    )
    return gob


def _product_name(first: GraphOfBisets, second: GraphOfBisets) -> str:
    if first.name and second.name:
        return f"{first.name}*{second.name}"
    return ""

