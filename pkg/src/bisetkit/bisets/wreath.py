"""
Wreath presentations of left-free bisets.

A left-free H-G-biset B with basis ``s_0, ..., s_{d-1}`` is described by its
wreath map: for every generator g of G,

    s_i * g = h_i * s_{perm[i]}      (h_i in H)

which we store as a ``DecoratedPermutation`` ``<h_0, ..., h_{d-1}>perm``.
Products are taken in the order the right action applies them, "left factor
first": for ``x = <h>σ`` and ``y = <h'>σ'``,

    (x * y).decorations[i] = h_i * h'_{σ(i)},   (x * y).perm[i] = σ'(σ(i)).

Worked example over ``H = <t>``: ``<1, t>(1 2) * <1, t>(1 2) = <t, t>()``.

Permutations are printed 1-based in disjoint cycle notation, matching the
usual ``t = <1, t>(1 2)`` convention.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from sympy.combinatorics import Permutation

from ..algebra import INFINITE, FpGroup, Homomorphism, Word
from ..models.reports import ValidationReport, Violation


@dataclass(frozen=True)
class DecoratedPermutation:
    """Element ``<h_0, ..., h_{d-1}>perm`` of ``H wr S_d`` (perm is 0-based)."""

    decorations: tuple[Word, ...]
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.decorations) != len(self.perm):
            raise ValueError("Decorations and permutation have different sizes")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"Not a permutation: {self.perm}")

    @classmethod
    def identity(cls, group: FpGroup, degree: int) -> DecoratedPermutation:
        return cls(tuple(group.identity() for _ in range(degree)), tuple(range(degree)))

    @classmethod
    def from_cycles(
        cls, decorations: Sequence[Word], cycles: Sequence[Sequence[int]]
    ) -> DecoratedPermutation:
        """Build from 0-based disjoint cycles."""
        size = len(decorations)
        if cycles:
            perm = Permutation([list(c) for c in cycles], size=size)
        else:
            perm = Permutation(list(range(size)))
        if perm.size != size:
            raise ValueError(f"Cycles {cycles} do not fit degree {size}")
        return cls(tuple(decorations), tuple(perm.array_form))

    @property
    def degree(self) -> int:
        return len(self.perm)

    @property
    def group(self) -> FpGroup:
        return self.decorations[0].group

    def __mul__(self, other: DecoratedPermutation) -> DecoratedPermutation:
        if other.degree != self.degree:
            raise ValueError(f"Degree mismatch: {self.degree} and {other.degree}")
        decorations = tuple(
            self.decorations[i] * other.decorations[self.perm[i]] for i in range(self.degree)
        )
        return DecoratedPermutation(decorations, tuple(other.perm[j] for j in self.perm))

    def inverse(self) -> DecoratedPermutation:
        decorations: list[Word | None] = [None] * self.degree
        perm = [0] * self.degree
        for j, target in enumerate(self.perm):
            perm[target] = j
            decorations[target] = self.decorations[j].inverse()
        return DecoratedPermutation(tuple(d for d in decorations if d is not None), tuple(perm))

    def __pow__(self, exponent: int) -> DecoratedPermutation:
        base = self if exponent >= 0 else self.inverse()
        result = DecoratedPermutation.identity(self.group, self.degree)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def conjugate(self, w: DecoratedPermutation) -> DecoratedPermutation:
        """Return ``w**-1 * self * w``."""
        return w.inverse() * self * w

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.degree)) and all(
            d.is_identity() for d in self.decorations
        )

    def map_decorations(self, hom: Homomorphism) -> DecoratedPermutation:
        return DecoratedPermutation(tuple(hom(d) for d in self.decorations), self.perm)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial 0-based cycles, each starting at its least point."""
        return [tuple(c) for c in Permutation(list(self.perm)).cyclic_form]

    def orbits(self) -> list[tuple[int, ...]]:
        """All 0-based cycles including fixed points, ordered by least point."""
        seen: set[int] = set()
        orbits = []
        for start in range(self.degree):
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            point = self.perm[start]
            while point != start:
                orbit.append(point)
                seen.add(point)
                point = self.perm[point]
            orbits.append(tuple(orbit))
        return orbits

    def __str__(self) -> str:
        decorations = ", ".join(str(d) for d in self.decorations)
        cycles = "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in self.cycles())
        return f"<{decorations}>{cycles or '()'}"


@dataclass(frozen=True)
class WreathBiset:
    """Left-free H-G-biset given by a wreath map on the generators of G.

    ``recursion[k]`` is the decorated permutation of the k-th generator of
    ``right_group``; decorations are words in ``left_group``.
    """

    left_group: FpGroup
    right_group: FpGroup
    degree: int
    recursion: tuple[DecoratedPermutation, ...]
    basis: tuple[str, ...] = field(default=(), compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("Biset degree must be positive")
        if len(self.recursion) != self.right_group.rank:
            raise ValueError(
                f"Need one recursion entry per generator of {self.right_group}, "
                f"got {len(self.recursion)}"
            )
        if not self.basis:
            object.__setattr__(self, "basis", tuple(str(i + 1) for i in range(self.degree)))
        if len(self.basis) != self.degree:
            raise ValueError("Basis labels do not match the degree")

    @classmethod
    def identity(cls, group: FpGroup) -> WreathBiset:
        """The identity biset ``G_G_G``: ``g = <g>()``."""
        return cls.from_homomorphism(Homomorphism.identity(group))

    @classmethod
    def from_homomorphism(cls, phi: Homomorphism, name: str = "") -> WreathBiset:
        """Right-principal biset ``B_phi`` of ``phi: G -> H``: ``g = <phi(g)>()``."""
        recursion = tuple(DecoratedPermutation((image,), (0,)) for image in phi.images)
        return cls(phi.target, phi.source, 1, recursion, name=name)

    @classmethod
    def from_mapping(
        cls,
        left_group: FpGroup,
        right_group: FpGroup,
        recursion: dict[str, DecoratedPermutation],
        basis: Sequence[str] = (),
        name: str = "",
    ) -> WreathBiset:
        """Build from generator name to decorated permutation; missing names act trivially."""
        degree = len(basis) if basis else len(next(iter(recursion.values())).perm)
        entries = tuple(
            recursion.get(g, DecoratedPermutation.identity(left_group, degree))
            for g in right_group.generator_names
        )
        return cls(left_group, right_group, degree, entries, tuple(basis), name)

    def image(self, word: Word) -> DecoratedPermutation:
        """Wreath image of an arbitrary word of the right group."""
        if word.group != self.right_group:
            raise ValueError(f"Word {word} is not in the right group {self.right_group}")
        result = DecoratedPermutation.identity(self.left_group, self.degree)
        for index, exponent in word.syllables:
            result = result * self.recursion[index] ** exponent
        return result

    def act(self, index: int, word: Word) -> tuple[Word, int]:
        """Right action on a basis element: ``s_index * word = h * s_j``."""
        entry = self.image(word)
        return entry.decorations[index], entry.perm[index]

    def act_generator(self, index: int, generator: int, exponent: int = 1) -> tuple[Word, int]:
        entry = self.recursion[generator]
        if exponent == 1:
            return entry.decorations[index], entry.perm[index]
        powered = entry**exponent
        return powered.decorations[index], powered.perm[index]

    def is_principal(self) -> bool:
        return self.degree == 1

    def is_biprincipal(self) -> bool:
        """Principal on both sides: degree 1 with an invertible homomorphism."""
        return self.degree == 1 and self.homomorphism().invert() is not None

    def homomorphism(self) -> Homomorphism:
        """The homomorphism of a degree-1 biset."""
        if self.degree != 1:
            raise ValueError("Only degree-1 bisets come from a homomorphism")
        return Homomorphism(
            self.right_group, self.left_group, tuple(e.decorations[0] for e in self.recursion)
        )

    def relabeled(self, basis: Sequence[str], name: str | None = None) -> WreathBiset:
        return WreathBiset(
            self.left_group,
            self.right_group,
            self.degree,
            self.recursion,
            tuple(basis),
            self.name if name is None else name,
        )

    def lines(self) -> list[str]:
        return [
            f"{name} = {entry}"
            for name, entry in zip(self.right_group.generator_names, self.recursion)
        ]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def wreath_validate(biset: WreathBiset) -> ValidationReport:
    """Check that the generator assignment extends to a homomorphism ``G -> H wr S_d``.

    Only finite-order factors impose relations: ``Φ(g)**n`` must be the
    identity decorated permutation.
    """
    violations: list[Violation] = []
    for factor, entry in zip(biset.right_group.factors, biset.recursion):
        if entry.degree != biset.degree:
            violations.append(
                Violation(
                    code="degree",
                    subject=factor.name,
                    message=f"entry has degree {entry.degree}, biset has {biset.degree}",
                )
            )
            continue
        foreign = [str(d) for d in entry.decorations if d.group != biset.left_group]
        if foreign:
            violations.append(
                Violation(
                    code="decoration_group",
                    subject=factor.name,
                    message=f"decorations {foreign} are not in {biset.left_group}",
                )
            )
            continue
        if factor.order != INFINITE:
            power = entry**factor.order
            if not power.is_identity():
                violations.append(
                    Violation(
                        code="relation",
                        subject=factor.name,
                        message=f"{factor.name}^{factor.order} maps to {power}, not the identity",
                    )
                )
    return ValidationReport.from_violations("wreath", biset.name, violations)
