"""
Approximate kernels of level actions.

The faithful quotient of a self-similar group is the quotient by the kernel
of its action on the whole tree. At a finite level and within a ball of
words this gives a superset of the true kernel, shrinking as the level
grows.
"""

from __future__ import annotations

from ..algebra import Word, enumerate_words
from ..bisets import WreathBiset
from ..config import Budget
from ..errors import BudgetExceededError
from ..logging import logger
from .levels import level_action


def approx_kernel(
    biset: WreathBiset, level: int, word_length: int, budget: Budget | None = None
) -> list[Word]:
    """Words of syllable length at most ``word_length`` acting trivially at ``level``.

    Raises:
        BudgetExceededError: if the level, its size, the word length or the
            number of enumerated words exceeds the budget.
    """
    budget = budget or Budget()
    budget.check_word_length(word_length)
    action = level_action(biset, level, budget)
    kernel = []
    count = 0
    for word in enumerate_words(biset.right_group, word_length):
        count += 1
        if count > budget.max_elements:
            raise BudgetExceededError("max_elements", budget.max_elements, count)
        if action.is_trivial(word):
            kernel.append(word)
    logger.debug(
        f"approx_kernel: {len(kernel)} of {count} words trivial at level {level} "
        f"of {biset.name or 'biset'}"
    )
    return kernel
