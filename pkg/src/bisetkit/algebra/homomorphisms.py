"""
Homomorphisms between free products of cyclic groups.

A homomorphism is determined by the images of the source generators; it is
well defined iff each image of a generator of finite order ``n`` satisfies
``image**n == 1``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from ..logging import logger
from .words import INFINITE, FpGroup, Word, enumerate_words, normalize


@dataclass(frozen=True)
class Homomorphism:
    """Group homomorphism given by generator images."""

    source: FpGroup
    target: FpGroup
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.source.rank:
            raise ValueError(
                f"Need {self.source.rank} generator images, got {len(self.images)}"
            )
        for image in self.images:
            if image.group != self.target:
                raise ValueError(f"Image {image} does not lie in {self.target}")

    @classmethod
    def identity(cls, group: FpGroup) -> Homomorphism:
        return cls(group, group, tuple(group.generators()))

    @classmethod
    def trivial(cls, source: FpGroup, target: FpGroup) -> Homomorphism:
        return cls(source, target, tuple(target.identity() for _ in source.factors))

    @classmethod
    def from_mapping(
        cls, source: FpGroup, target: FpGroup, mapping: Mapping[str, Word]
    ) -> Homomorphism:
        """Build from generator name to image; unnamed generators map to 1."""
        unknown = set(mapping) - set(source.generator_names)
        if unknown:
            raise ValueError(f"Unknown source generators: {sorted(unknown)}")
        return cls(
            source,
            target,
            tuple(mapping.get(name, target.identity()) for name in source.generator_names),
        )

    def __call__(self, word: Word) -> Word:
        if word.group != self.source:
            raise ValueError(f"Word {word} is not in the source group {self.source}")
        syllables = []
        for index, exponent in word.syllables:
            image = self.images[index]
            if exponent < 0:
                image = image.inverse()
            for _ in range(abs(exponent)):
                syllables.extend(image.syllables)
        return normalize(syllables, self.target)

    def then(self, other: Homomorphism) -> Homomorphism:
        """Composite ``x -> other(self(x))``."""
        if other.source != self.target:
            raise ValueError("Homomorphisms are not composable")
        return Homomorphism(self.source, other.target, tuple(other(i) for i in self.images))

    def is_identity(self) -> bool:
        return self.source == self.target and all(
            image == gen for image, gen in zip(self.images, self.source.generators())
        )

    def violations(self) -> list[str]:
        """Relations of the source that the images fail to satisfy."""
        problems = []
        for factor, image in zip(self.source.factors, self.images):
            if factor.order != INFINITE and not (image**factor.order).is_identity():
                problems.append(
                    f"image {image} of {factor.name} does not have order dividing {factor.order}"
                )
        return problems

    def invert(self, max_length: int = 4) -> Homomorphism | None:
        """Find an inverse by bounded search over source words.

        Returns ``None`` if some target generator has no preimage of syllable
        length at most ``max_length`` or if the candidate is not a two-sided
        inverse.
        """
        preimages: dict[Word, Word] = {}
        wanted = set(self.target.generators())
        for candidate in enumerate_words(self.source, max_length):
            image = self(candidate)
            if image in wanted and image not in preimages:
                preimages[image] = candidate
                if len(preimages) == len(wanted):
                    break
        if len(preimages) != len(wanted):
            logger.debug(f"Homomorphism.invert: no preimage within length {max_length}")
            return None
        inverse = Homomorphism(
            self.target, self.source, tuple(preimages[g] for g in self.target.generators())
        )
        if inverse.violations() or not self.then(inverse).is_identity():
            return None
        return inverse

    def __str__(self) -> str:
        pairs = ", ".join(
            f"{name} -> {image}" for name, image in zip(self.source.generator_names, self.images)
        )
        return "{" + pairs + "}"
