"""
Braid Service
Domain service for braid words of L-shaped divides
"""

import logging
from collections import Counter
from typing import Dict, List, Optional, Tuple

from domain.exceptions.atlas_errors import ValidationError
from domain.services.handle_reduction import HandleReducer
from domain.value_objects.braid_word import BraidWord, ReducedForm, concat
from domain.value_objects.regions import LRegion


logger = logging.getLogger(__name__)


class BraidService:
    """
    Braid Service (Domain Service)

    Builds the braid of an L-shaped region, its alternating Claim-1 form
    and the conjugators relating the two, and decides word equality
    through handle reduction.
    """

    def __init__(self, reducer: Optional[HandleReducer] = None):
        self.reducer = reducer or HandleReducer()

    # Building blocks

    def W(self, n: int, index: int) -> BraidWord:
        """σ_{n-1} σ_{n-2} ⋯ σ_1 on `index` strands"""
        return BraidWord.descending(n, index)

    def rho(self, word: BraidWord) -> BraidWord:
        """π-rotation: reverse the word and send σ_i to σ_{n-i}"""
        n = word.index
        return BraidWord(n, tuple(
            (n - abs(x)) * (1 if x > 0 else -1) for x in reversed(word.letters)
        ))

    def e(self, n: int, index: int) -> BraidWord:
        """Product of the even generators σ_i, i < n, in increasing order"""
        return BraidWord(index, tuple(i for i in range(2, n, 2)))

    def o(self, n: int, index: int) -> BraidWord:
        """Product of the odd generators σ_i, i < n, in increasing order"""
        return BraidWord(index, tuple(i for i in range(1, n, 2)))

    def alternating(self, n: int, odd_first_parity: int, index: int) -> BraidWord:
        """e(n)o(n) when the parity is odd, o(n)e(n) when it is even"""
        if odd_first_parity % 2:
            return self.e(n, index) * self.o(n, index)
        return self.o(n, index) * self.e(n, index)

    # Region braids

    def cp_braid(self, region: LRegion) -> BraidWord:
        """W(a2)^{b1} W(a1)^{b2-b1} on a2 strands"""
        a2 = region.a2
        return (
            self.W(a2, a2) ** region.b1
            * self.W(region.a1, a2) ** (region.b2 - region.b1)
        )

    def cp_factors(self, region: LRegion) -> List[Tuple[int, int]]:
        """Macro factors [(a2, b1), (a1, b2 - b1)] of cp_braid"""
        return [(region.a2, region.b1), (region.a1, region.b2 - region.b1)]

    def claim1_braid(self, region: LRegion) -> BraidWord:
        """
        Alternating form read off the lattice picture

        (e(a2)o(a2))^{b1} (e(a1)o(a1))^{b2-b1} for odd a1; for even a1
        each factor starts with the odd generators instead.
        """
        a1, a2 = region.a1, region.a2
        return (
            self.alternating(a2, a1, a2) ** region.b1
            * self.alternating(a1, a1, a2) ** (region.b2 - region.b1)
        )

    # Conjugators

    def G(self, n: int, index: int) -> BraidWord:
        """G(n) = head(n)·G(n-2), G(n) empty for n <= 1"""
        words: List[BraidWord] = []
        while n > 1:
            if n % 2:
                words.append(self.e(n + 1, index) * self.o(n, index))
            else:
                words.append(self.o(n + 1, index) * self.e(n, index))
            n -= 2
        return concat(words, index)

    def H(self, a1: int, a2: int) -> BraidWord:
        """ρ(G(a2 - a1 - 1)) on a2 strands"""
        return self.rho(self.G(a2 - a1 - 1, a2))

    def omega(self, a1: int, a2: int) -> BraidWord:
        """Ω = H^{-1} G(a1 - 2)"""
        return self.H(a1, a2).inverse() * self.G(a1 - 2, a2)

    def conjugators(self, a1: int, a2: int) -> Tuple[BraidWord, BraidWord, BraidWord]:
        """
        (G(a1-2), H(a1,a2), Ω(a1,a2)) on a2 strands

        Raises:
            ValidationError: Unless 1 <= a1 < a2
        """
        if not 1 <= a1 < a2:
            raise ValidationError(
                "Conjugators need 1 <= a1 < a2",
                field="a1",
                value=(a1, a2),
                constraint="1 <= a1 < a2"
            )
        return self.G(a1 - 2, a2), self.H(a1, a2), self.omega(a1, a2)

    # Identities

    def claim2_holds(self, n: int) -> bool:
        """G(n-2)^{-1}·alternating(n)·G(n-2) = W(n)"""
        g = self.G(n - 2, n)
        return self.equal(g.inverse() * self.alternating(n, n, n) * g, self.W(n, n))

    def claim3_holds(self, a1: int, a2: int) -> bool:
        """H commutes with e(a1), o(a1) and G(a1-2)"""
        h = self.H(a1, a2)
        return all(
            self.equal(h * w, w * h)
            for w in (self.e(a1, a2), self.o(a1, a2), self.G(a1 - 2, a2))
        )

    def claim4_holds(self, a1: int, a2: int) -> bool:
        """Ω^{-1}·alternating(a1)·Ω = W(a1)"""
        om = self.omega(a1, a2)
        return self.equal(om.inverse() * self.alternating(a1, a1, a2) * om, self.W(a1, a2))

    def claim5_holds(self, a1: int, a2: int) -> bool:
        """Ω^{-1}·alternating(a2)·Ω = W(a1) W(a2) W(a1)^{-1}, parity of a1"""
        om = self.omega(a1, a2)
        w1 = self.W(a1, a2)
        return self.equal(
            om.inverse() * self.alternating(a2, a1, a2) * om,
            w1 * self.W(a2, a2) * w1.inverse()
        )

    def conjugated_claim1_holds(self, region: LRegion) -> bool:
        """Ω^{-1}·claim1·Ω = W(a1) W(a2)^{b1} W(a1)^{b2-b1-1}"""
        a1, a2 = region.a1, region.a2
        om = self.omega(a1, a2)
        w1 = self.W(a1, a2)
        target = w1 * self.W(a2, a2) ** region.b1 * w1 ** (region.b2 - region.b1 - 1)
        return self.equal(om.inverse() * self.claim1_braid(region) * om, target)

    def lemma24_pair(self, a1: int, a2: int, c: int) -> Tuple[BraidWord, BraidWord]:
        """W(a2)^c W(a1)^{-1} and W(a2)^{c-1} W(a2-a1+1), which close to the same knot"""
        return (
            self.W(a2, a2) ** c * self.W(a1, a2).inverse(),
            self.W(a2, a2) ** (c - 1) * self.W(a2 - a1 + 1, a2)
        )

    # Word problem

    def handle_reduce(self, word: BraidWord) -> ReducedForm:
        return self.reducer.reduce(word)

    def equal(self, w1: BraidWord, w2: BraidWord) -> bool:
        return self.reducer.equal(w1, w2)

    # Closures

    def permutation(self, word: BraidWord) -> List[int]:
        """perm[s] = final position of the strand starting at position s"""
        position = list(range(word.index))
        occupant = list(range(word.index))
        for x in word.letters:
            i = abs(x) - 1
            left, right = occupant[i], occupant[i + 1]
            occupant[i], occupant[i + 1] = right, left
            position[left], position[right] = i + 1, i
        return position

    def strand_components(self, word: BraidWord) -> List[int]:
        """Closure component id of every starting position"""
        perm = self.permutation(word)
        component = [-1] * word.index
        count = 0
        for start in range(word.index):
            if component[start] >= 0:
                continue
            s = start
            while component[s] < 0:
                component[s] = count
                s = perm[s]
            count += 1
        return component

    def closure_components(self, word: BraidWord) -> int:
        return max(self.strand_components(word), default=-1) + 1

    def linking_numbers(self, word: BraidWord) -> Dict[Tuple[int, int], int]:
        """Pairwise linking numbers of the closure components"""
        component = self.strand_components(word)
        occupant = list(range(word.index))
        twice: Counter = Counter()
        for x in word.letters:
            i = abs(x) - 1
            c1, c2 = component[occupant[i]], component[occupant[i + 1]]
            if c1 != c2:
                twice[(min(c1, c2), max(c1, c2))] += 1 if x > 0 else -1
            occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
        count = max(component, default=-1) + 1
        return {
            (i, j): twice[(i, j)] // 2
            for i in range(count)
            for j in range(i + 1, count)
        }

    def full_twist(self, word: BraidWord, m: int, n: int) -> BraidWord:
        """Append n full twists (W(m)^m)^n on the first m strands"""
        if not 1 <= m <= word.index:
            raise ValidationError(
                f"Full twist on {m} strands of an index-{word.index} word",
                field="m",
                value=m,
                constraint=f"1 <= m <= {word.index}"
            )
        return word * (self.W(m, word.index) ** m) ** n

    def mirror_case(self, c: int, delta: int, a1: int, a2: int) -> Tuple[LRegion, bool]:
        """
        Region presenting the closure of W(a2)^c W(a1)^δ

        Returns:
            (region, mirror) where mirror means the closure is the mirror
            image of the knot of the region

        Raises:
            ValidationError: On c = 0, bad signs, or (+-) with |c| = 1
        """
        if c == 0 or delta not in (1, -1) or not 0 < a1 < a2:
            raise ValidationError(
                "mirror_case needs c != 0, a sign delta and 0 < a1 < a2",
                field="c",
                value=(c, delta, a1, a2)
            )
        size = abs(c)
        mirror = c < 0
        same_sign = (c > 0) == (delta > 0)
        if same_sign:
            return LRegion(a1, a2, size, size + 1), mirror
        if size == 1:
            raise ValidationError(
                "The (+-) case needs |c| >= 2",
                field="c",
                value=c,
                constraint="|c| >= 2"
            )
        return LRegion(a2 - a1 + 1, a2, size - 1, size), mirror
