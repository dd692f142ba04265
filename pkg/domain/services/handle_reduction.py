"""
Handle Reduction
Word problem for Artin braid groups by handle reduction
"""

import logging
from typing import List

from domain.exceptions.atlas_errors import ReductionBudgetExceeded
from domain.value_objects.braid_word import BraidWord, ReducedForm


logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10_000_000


class HandleReducer:
    """
    Handle reduction with a step budget

    A σ_i-handle is a subword σ_i^e v σ_i^{-e} where v contains no σ_j
    with j <= i. Reducing it deletes both ends and replaces every σ_{i+1}^d
    in v by σ_{i+1}^{-e} σ_i^d σ_{i+1}^e. Handles are reduced in order of
    their right end, which keeps every reduced handle permitted. The
    result is handle-free: either empty or σ-positive/negative in its
    smallest generator.
    """

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.budget = budget

    def reduce(self, word: BraidWord) -> ReducedForm:
        """
        Reduce a word to handle-free form

        Raises:
            ReductionBudgetExceeded: If more than `budget` letter
                operations are needed
        """
        letters: List[int] = list(word.letters)
        steps = 0
        pos = 0
        last = [-1] * (word.index + 1)

        while pos < len(letters):
            steps += 1
            x = letters[pos]
            i = abs(x)
            k = last[i]
            if k >= 0 and letters[k] == -x and all(last[m] < k for m in range(1, i)):
                e = 1 if letters[k] > 0 else -1
                middle: List[int] = []
                for y in letters[k + 1:pos]:
                    if abs(y) == i + 1:
                        d = 1 if y > 0 else -1
                        middle.extend((-e * (i + 1), d * i, e * (i + 1)))
                    else:
                        middle.append(y)
                letters = letters[:k] + middle + letters[pos + 1:]
                steps += len(middle)
                if steps > self.budget:
                    raise ReductionBudgetExceeded(
                        f"Handle reduction of a length-{len(word)} word exceeded its budget",
                        budget=self.budget,
                        steps=steps
                    )
                # rescan from the start of the reduced handle
                pos = k
                last = [-1] * (word.index + 1)
                for p in range(k):
                    last[abs(letters[p])] = p
                steps += k
                continue
            last[i] = pos
            pos += 1

        reduced = BraidWord(word.index, tuple(letters))
        if not letters:
            return ReducedForm(word=reduced, trivial=True, sigma_positive=None, steps=steps)
        smallest = min(abs(y) for y in letters)
        positive = next(y for y in letters if abs(y) == smallest) > 0
        return ReducedForm(word=reduced, trivial=False, sigma_positive=positive, steps=steps)

    def is_trivial(self, word: BraidWord) -> bool:
        return self.reduce(word).trivial

    def equal(self, w1: BraidWord, w2: BraidWord) -> bool:
        """Whether two words represent the same braid"""
        index = max(w1.index, w2.index)
        return self.is_trivial(w1.at_index(index) * w2.at_index(index).inverse())
