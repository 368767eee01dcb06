"""
Congruences between left-free bisets.

A congruence ``(psi, beta, phi)`` from an H-G-biset B to an H'-G'-biset B'
consists of homomorphisms ``psi: H -> H'`` and ``phi: G -> G'`` and a map
``beta: B -> B'`` with ``(h * b * g)^beta = psi(h) * b^beta * phi(g)``. Both
bisets are taken in wreath form; ``beta`` is determined by the images of the
basis, ``beta(s_i) = k_i * s'_{j_i}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import Homomorphism, Word
from ..models.reports import ValidationReport, Violation
from .wreath import WreathBiset

Element = tuple[Word, int]


@dataclass(frozen=True)
class Congruence:
    source: WreathBiset
    target: WreathBiset
    left_hom: Homomorphism
    right_hom: Homomorphism
    images: tuple[Element, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.source.degree:
            raise ValueError(
                f"Need {self.source.degree} basis images, got {len(self.images)}"
            )
        if self.left_hom.source != self.source.left_group:
            raise ValueError("Left homomorphism does not start at the source left group")
        if self.left_hom.target != self.target.left_group:
            raise ValueError("Left homomorphism does not end at the target left group")
        if self.right_hom.source != self.source.right_group:
            raise ValueError("Right homomorphism does not start at the source right group")
        if self.right_hom.target != self.target.right_group:
            raise ValueError("Right homomorphism does not end at the target right group")
        for word, index in self.images:
            if word.group != self.target.left_group or not 0 <= index < self.target.degree:
                raise ValueError(f"Basis image ({word}, {index}) is not an element of the target")

    @classmethod
    def identity(cls, biset: WreathBiset) -> Congruence:
        return cls(
            biset,
            biset,
            Homomorphism.identity(biset.left_group),
            Homomorphism.identity(biset.right_group),
            tuple((biset.left_group.identity(), i) for i in range(biset.degree)),
        )

    def apply(self, h: Word, index: int) -> Element:
        """Image of the element ``h * s_index``."""
        k, j = self.images[index]
        return self.left_hom(h) * k, j

    def then(self, other: Congruence) -> Congruence:
        """Composite ``other . self``."""
        if other.source != self.target:
            raise ValueError("Congruences are not composable")
        return Congruence(
            self.source,
            other.target,
            self.left_hom.then(other.left_hom),
            self.right_hom.then(other.right_hom),
            tuple(other.apply(k, j) for k, j in self.images),
        )

    def is_identity(self) -> bool:
        return (
            self.source == self.target
            and self.left_hom.is_identity()
            and self.right_hom.is_identity()
            and all(k.is_identity() and j == i for i, (k, j) in enumerate(self.images))
        )

    def is_bijective(self) -> bool:
        """Bijective on elements, assuming ``left_hom`` is an isomorphism."""
        return sorted(j for _, j in self.images) == list(range(self.target.degree))

    def violations(self) -> list[Violation]:
        problems = [
            Violation(code="left_hom", subject="left", message=m)
            for m in self.left_hom.violations()
        ]
        problems += [
            Violation(code="right_hom", subject="right", message=m)
            for m in self.right_hom.violations()
        ]
        for generator, name in enumerate(self.source.right_group.generator_names):
            g_image = self.right_hom(self.source.right_group.generator(generator))
            for i in range(self.source.degree):
                h, j = self.source.act_generator(i, generator)
                expected = self.apply(h, j)
                k, b = self.images[i]
                h2, b2 = self.target.act(b, g_image)
                actual = (k * h2, b2)
                if expected != actual:
                    problems.append(
                        Violation(
                            code="equivariance",
                            subject=f"{self.source.basis[i]}*{name}",
                            message=(
                                f"image of s*g is {expected[0]}*{self.target.basis[expected[1]]} "
                                f"but image(s)*phi(g) is {actual[0]}*{self.target.basis[actual[1]]}"
                            ),
                        )
                    )
        return problems

    def check(self, name: str = "") -> ValidationReport:
        return ValidationReport.from_violations("congruence", name, self.violations())

    def describe(self) -> str:
        return ", ".join(
            f"{self.source.basis[i]} -> {self._element(k, j)}"
            for i, (k, j) in enumerate(self.images)
        )

    def _element(self, k: Word, j: int) -> str:
        label = self.target.basis[j]
        return label if k.is_identity() else f"{k}:{label}"
