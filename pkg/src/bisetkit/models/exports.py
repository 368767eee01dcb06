"""
Public JSON models for CLI output.

Every ``--json`` payload is one of these models; ``bisetkit schema`` prints
their JSON schemas.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..bisets import LiftTerm, ThurstonMatrix, WreathBiset
from ..gob import FundamentalBiset, GraphOfBisets
from ..graphs import Pi1Presentation


class WreathExport(BaseModel):
    """A left-free biset as a wreath recursion."""

    name: str = Field(default="", description="Name of the biset.")
    degree: int = Field(description="Size of the basis.")
    left_generators: list[str] = Field(description="Generators of the left group.")
    right_generators: list[str] = Field(description="Generators of the right group.")
    left_orders: list[int] = Field(description="Orders of the left generators (0 = infinite).")
    right_orders: list[int] = Field(description="Orders of the right generators (0 = infinite).")
    basis: list[str] = Field(description="Basis labels in basis order.")
    recursion: dict[str, str] = Field(
        description="Decorated permutation of every right generator, 1-based cycles."
    )

    @classmethod
    def from_biset(cls, biset: WreathBiset) -> WreathExport:
        return cls(
            name=biset.name,
            degree=biset.degree,
            left_generators=list(biset.left_group.generator_names),
            right_generators=list(biset.right_group.generator_names),
            left_orders=[f.order for f in biset.left_group.factors],
            right_orders=[f.order for f in biset.right_group.factors],
            basis=list(biset.basis),
            recursion={
                name: str(entry)
                for name, entry in zip(biset.right_group.generator_names, biset.recursion)
            },
        )


class Pi1Export(BaseModel):
    """Presentation of the fundamental group of a graph of groups."""

    graph: str = Field(default="", description="Name of the graph of groups.")
    base: str = Field(description="Base vertex.")
    generators: list[str] = Field(description="Generators: vertex factors, then stable letters.")
    orders: list[int] = Field(description="Order of every generator (0 = infinite).")
    relators: list[str] = Field(description="Edge relators; empty for a free product.")
    tree: list[str] = Field(description="Edges of the spanning tree.")
    stable_letters: dict[str, str] = Field(
        description="Generator of every edge outside the tree."
    )

    @classmethod
    def from_presentation(cls, presentation: Pi1Presentation) -> Pi1Export:
        group = presentation.group
        return cls(
            graph=presentation.gog.name,
            base=presentation.base,
            generators=list(group.generator_names),
            orders=[f.order for f in group.factors],
            relators=[str(r) for r in presentation.relators],
            tree=sorted(presentation.tree),
            stable_letters={
                edge: group.factors[index].name
                for edge, index in sorted(presentation.stable_letters.items())
            },
        )


class FundamentalBisetExport(BaseModel):
    """Wreath recursion of the fundamental biset of a graph of bisets."""

    gob: str = Field(default="", description="Name of the graph of bisets.")
    dagger: str = Field(description="Base vertex of the left graph of groups.")
    star: str = Field(description="Base vertex of the right graph of groups.")
    biset: WreathExport = Field(description="The recursion.")
    basis_paths: dict[str, str] = Field(
        description="Tree path from dagger to the carrier vertex of every basis element."
    )
    longest_path: int = Field(description="Longest path that occurred while lifting loops.")

    @classmethod
    def from_fundamental(
        cls, fundamental: FundamentalBiset, gob: str = ""
    ) -> FundamentalBisetExport:
        return cls(
            gob=gob,
            dagger=fundamental.left.base,
            star=fundamental.right.base,
            biset=WreathExport.from_biset(fundamental.biset),
            basis_paths={entry.label: entry.path.format() for entry in fundamental.basis},
            longest_path=fundamental.max_path_length,
        )


class GobExport(BaseModel):
    """Carrier, maps and bisets of a graph of bisets."""

    name: str = Field(default="", description="Name of the graph of bisets.")
    vertices: list[str] = Field(description="Carrier vertices.")
    edges: dict[str, list[str]] = Field(description="Carrier edges as [origin, terminus].")
    lam: dict[str, str] = Field(description="Image in the left graph of every object.")
    rho: dict[str, str] = Field(description="Image in the right graph of every object.")
    degrees: dict[str, int] = Field(description="Degree of the biset of every object.")
    left_free: bool = Field(description="Whether every biset is left-free.")

    @classmethod
    def from_gob(cls, gob: GraphOfBisets) -> GobExport:
        carrier = gob.carrier
        objects = list(carrier.vertices) + carrier.geometric_edges()
        degrees: dict[str, int] = {}
        left_free = True
        for x in objects:
            try:
                degrees[x] = gob.degree(x)
            except ValueError:
                left_free = False
        return cls(
            name=gob.name,
            vertices=list(carrier.vertices),
            edges={e.name: [e.origin, e.terminus] for e in carrier.edges},
            lam={x: gob.lam(x) for x in objects},
            rho={x: gob.rho(x) for x in objects},
            degrees=degrees,
            left_free=left_free,
        )


class LiftExport(BaseModel):
    """Lift of a conjugacy class through a biset."""

    biset: str = Field(default="", description="Name of the biset.")
    conj_class: str = Field(description="Lifted conjugacy class of the right group.")
    terms: list[str] = Field(description="Lift terms as degree:[class], sorted.")
    degree_sum: int = Field(description="Sum of the term degrees; equals the biset degree.")

    @classmethod
    def from_terms(cls, biset: WreathBiset, conj_class: str, terms: list[LiftTerm]) -> LiftExport:
        return cls(
            biset=biset.name,
            conj_class=conj_class,
            terms=[str(t) for t in terms],
            degree_sum=sum(t.degree for t in terms),
        )


class ThurstonExport(BaseModel):
    """Matrix of the Thurston endomorphism on a span of conjugacy classes."""

    biset: str = Field(default="", description="Name of the biset.")
    classes: list[str] = Field(description="Row and column classes.")
    matrix: list[list[str]] = Field(description="Exact rational entries, row by row.")
    extra: list[str] = Field(description="Lifted classes outside the span.")

    @classmethod
    def from_matrix(cls, biset: WreathBiset, result: ThurstonMatrix) -> ThurstonExport:
        size = len(result.classes)
        return cls(
            biset=biset.name,
            classes=[str(c) for c in result.classes],
            matrix=[[str(result.entry(i, j)) for j in range(size)] for i in range(size)],
            extra=[str(c) for c in result.extra],
        )


class EntryExport(BaseModel):
    """A named workspace entry."""

    name: str = Field(description="Entry name.")
    kind: str = Field(description="Entry kind: group, biset, gog, gob or htree.")
    line: int = Field(default=0, description="Line of the entry in its source document.")


class KernelExport(BaseModel):
    """Short words acting trivially on one level of a self-biset's tree."""

    biset: str = Field(default="", description="Name of the biset.")
    level: int = Field(description="Tree level.")
    word_length: int = Field(description="Largest syllable length enumerated.")
    kernel: list[str] = Field(description="Words acting trivially, in shortlex order.")
