"""
Invariant Service
Genus and Alexander polynomial of braid closures
"""

import logging
from math import gcd
from typing import Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement

from domain.exceptions.atlas_errors import InvariantError, ValidationError
from domain.services.braid_service import BraidService
from domain.value_objects.braid_word import BraidWord
from domain.value_objects.knot_profile import KnotProfile
from domain.value_objects.laurent_poly import LaurentPoly, T, T_RING


logger = logging.getLogger(__name__)

Block = List[List[PolyElement]]


def _burau_block(i: int, n: int, inverse: bool) -> Tuple[int, Block]:
    """
    Nontrivial block of the reduced Burau matrix of σ_i^{±1}

    Inverse letters are scaled by t so every entry stays polynomial;
    the caller scales the identity part accordingly.

    Returns:
        (first column of the block, block rows)
    """
    one, zero = T_RING.one, T_RING.zero
    if n == 2:
        return 0, [[-one if inverse else -T]]
    if i == 1:
        if inverse:
            return 0, [[-one, zero], [one, T]]
        return 0, [[-T, zero], [one, one]]
    if i == n - 1:
        if inverse:
            return n - 3, [[T, T], [zero, -one]]
        return n - 3, [[one, T], [zero, -T]]
    if inverse:
        return i - 2, [[T, T, zero], [zero, -one, zero], [zero, one, T]]
    return i - 2, [[one, T, zero], [zero, -T, zero], [zero, one, one]]


class InvariantService:
    """
    Invariant Service (Domain Service)

    Alexander polynomials come from the reduced Burau representation,
    with a Seifert-matrix computation for positive words as an
    independent check, and the torus-knot formula as a baseline.
    """

    def __init__(
        self,
        braid_service: Optional[BraidService] = None,
        max_index: int = 20,
        max_length: int = 400
    ):
        self.braids = braid_service or BraidService()
        self.max_index = max_index
        self.max_length = max_length

    def within_caps(self, word: BraidWord) -> bool:
        return word.index <= self.max_index and len(word) <= self.max_length

    def _require_knot(self, word: BraidWord, invariant: str) -> None:
        components = self.braids.closure_components(word)
        if components != 1:
            raise InvariantError(
                f"Closure has {components} components",
                invariant=invariant,
                detail=word.expanded()[:80]
            )

    def bennequin_genus(self, word: BraidWord) -> int:
        """
        (letters - index + 1) / 2 for positive words closing to a knot

        Raises:
            InvariantError: For non-positive words or links
        """
        if not word.is_positive:
            raise InvariantError(
                "Bennequin genus needs a positive word",
                invariant="bennequin_genus"
            )
        self._require_knot(word, "bennequin_genus")
        return (len(word) - word.index + 1) // 2

    def burau_matrix(self, word: BraidWord) -> Tuple[Block, int]:
        """
        t^m times the reduced Burau matrix, m the number of inverse letters

        Returns:
            (matrix rows, m)
        """
        n = word.index
        size = n - 1
        rows = [[T_RING.one if r == c else T_RING.zero for c in range(size)] for r in range(size)]
        inverses = 0
        for x in word.letters:
            inverse = x < 0
            start, block = _burau_block(abs(x), n, inverse)
            width = len(block)
            for row in rows:
                window = row[start:start + width]
                for j in range(width):
                    row[start + j] = sum(
                        (window[k] * block[k][j] for k in range(width)),
                        T_RING.zero
                    )
                if inverse:
                    for c in range(size):
                        if not start <= c < start + width:
                            row[c] = row[c] * T
            inverses += inverse
        return rows, inverses

    def alexander(self, word: BraidWord, enforce_caps: bool = False) -> LaurentPoly:
        """
        Normalized Alexander polynomial of the closure

        Δ ≐ det(I - M)·(1 - t)/(1 - t^n), evaluated as det(t^m I - t^m M)
        with exact division.

        Raises:
            InvariantError: For links, failed division, non-palindromic
                results, or (with enforce_caps) oversized words
        """
        if enforce_caps and not self.within_caps(word):
            raise InvariantError(
                f"Word of index {word.index} and length {len(word)} exceeds the Alexander caps",
                invariant="alexander",
                detail=f"max_index={self.max_index}, max_length={self.max_length}"
            )
        self._require_knot(word, "alexander")
        n = word.index
        if n == 1:
            return LaurentPoly(0, (1,))

        rows, m = self.burau_matrix(word)
        scale = T ** m
        for r, row in enumerate(rows):
            rows[r] = [(scale if r == c else T_RING.zero) - entry for c, entry in enumerate(row)]
        det = DomainMatrix(rows, (n - 1, n - 1), T_RING.to_domain()).det()

        quotient, remainder = (det * (1 - T)).div(1 - T ** n)
        if remainder:
            raise InvariantError(
                "Burau determinant not divisible by 1 + t + ... + t^(n-1)",
                invariant="alexander",
                detail=str(remainder)
            )
        return self._finish(LaurentPoly.from_poly(quotient), "alexander")

    def seifert_alexander(self, word: BraidWord) -> LaurentPoly:
        """
        Alexander polynomial from the Seifert matrix of a positive braid

        Basis: one brick per pair of consecutive occurrences of a
        generator. V = -I + U, where for bricks u, v with u starting
        first U(u, v) = 1 for consecutive bricks of one column, and for
        interleaving bricks of neighbouring columns U(u, v) = 1 when u
        is in the left column and -1 when it is in the right one.

        Raises:
            InvariantError: For non-positive words or links
        """
        if not word.is_positive:
            raise InvariantError("Seifert oracle needs a positive word", invariant="seifert_alexander")
        self._require_knot(word, "seifert_alexander")

        occurrences: Dict[int, List[int]] = {}
        for pos, x in enumerate(word.letters):
            occurrences.setdefault(x, []).append(pos)
        bricks = sorted(
            (occ[j], occ[j + 1], column)
            for column, occ in occurrences.items()
            for j in range(len(occ) - 1)
        )
        size = len(bricks)
        if size == 0:
            return LaurentPoly(0, (1,))

        V = [[-1 if u == v else 0 for v in range(size)] for u in range(size)]
        for u in range(size):
            su, eu, cu = bricks[u]
            for v in range(u + 1, size):
                sv, ev, cv = bricks[v]
                if cu == cv and sv == eu:
                    V[u][v] = 1
                elif abs(cu - cv) == 1 and su < sv < eu < ev:
                    V[u][v] = 1 if cu < cv else -1

        rows = [
            [V[u][v] - T * V[v][u] for v in range(size)]
            for u in range(size)
        ]
        rows = [[T_RING(entry) for entry in row] for row in rows]
        det = DomainMatrix(rows, (size, size), T_RING.to_domain()).det()
        return self._finish(LaurentPoly.from_poly(det), "seifert_alexander")

    def torus_alexander(self, p: int, q: int) -> LaurentPoly:
        """
        (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized

        Raises:
            ValidationError: Unless p, q >= 2 are coprime
        """
        if p < 2 or q < 2 or gcd(p, q) != 1:
            raise ValidationError(
                f"T({p},{q}) is not a nontrivial torus knot",
                field="q",
                value=(p, q),
                constraint="p, q >= 2 and gcd(p, q) = 1"
            )
        quotient, remainder = ((T ** (p * q) - 1) * (T - 1)).div((T ** p - 1) * (T ** q - 1))
        if remainder:
            raise InvariantError("Torus division failed", invariant="torus_alexander")
        return self._finish(LaurentPoly.from_poly(quotient), "torus_alexander")

    def _finish(self, poly: LaurentPoly, invariant: str) -> LaurentPoly:
        result = poly.normalized()
        if result.is_zero or not result.is_palindromic():
            raise InvariantError(
                "Alexander polynomial is not a nonzero palindrome",
                invariant=invariant,
                detail=str(result)
            )
        return result

    def determinant(self, alexander: LaurentPoly) -> int:
        return abs(alexander.evaluate(-1))

    def profile(self, word: BraidWord, enforce_caps: bool = False) -> KnotProfile:
        """
        Profile of a knot closure

        Words beyond the Alexander caps get a partial, genus-only
        profile; this needs a positive word.
        """
        self._require_knot(word, "profile")
        positive = word.is_positive
        alexander = None
        if self.within_caps(word) or enforce_caps:
            alexander = self.alexander(word, enforce_caps=enforce_caps)
        elif not positive:
            raise InvariantError(
                "Oversized non-positive word has no computable genus",
                invariant="profile",
                detail=f"index={word.index}, length={len(word)}"
            )
        else:
            logger.info("Alexander polynomial skipped for index %d, length %d", word.index, len(word))

        if positive:
            genus = self.bennequin_genus(word)
        else:
            genus = alexander.span // 2

        return KnotProfile(
            genus=genus,
            alexander=alexander,
            determinant=self.determinant(alexander) if alexander is not None else None,
            positive_braid=positive,
            fibered=positive,
            unknotting_number_bound=genus if positive else None
        )

    def same_profile(self, w1: BraidWord, w2: BraidWord) -> bool:
        return self.profile(w1).matches(self.profile(w2))
