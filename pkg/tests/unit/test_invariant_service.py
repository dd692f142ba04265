"""
Unit Tests for the Invariant Service
Genus, Alexander polynomials, determinants and profiles
"""

import pytest

from domain.exceptions.atlas_errors import InvariantError, ValidationError
from domain.services.invariant_service import InvariantService
from domain.value_objects.braid_word import BraidWord
from domain.value_objects.laurent_poly import LaurentPoly


TREFOIL = LaurentPoly(0, (1, -1, 1))
LEHMER = LaurentPoly(0, (1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1))


@pytest.fixture
def lehmer_word(braids):
    return braids.W(5, 5) ** 3 * braids.W(3, 5)


class TestGenus:
    """Test the Bennequin count"""

    def test_positive_words(self, invariants, braids, lehmer_word):
        """Test genus of trefoil, the [3,5;3,4] knot and the worked example"""
        assert invariants.bennequin_genus(braids.W(3, 3) ** 2) == 1
        assert invariants.bennequin_genus(lehmer_word) == 5
        assert invariants.bennequin_genus(braids.W(13, 13) ** 16 * braids.W(11, 13)) == 95

    def test_non_positive_word(self, invariants):
        """Test negative letters are rejected"""
        with pytest.raises(InvariantError, match="positive"):
            invariants.bennequin_genus(BraidWord(3, (1, -2)))

    def test_link(self, invariants):
        """Test links are rejected"""
        with pytest.raises(InvariantError, match="2 components"):
            invariants.bennequin_genus(BraidWord(2, (1, 1)))


class TestAlexander:
    """Test Burau and Seifert computations"""

    def test_trefoil(self, invariants, braids):
        """Test Δ of the trefoil and its determinant"""
        poly = invariants.alexander(braids.W(3, 3) ** 2)
        assert poly == TREFOIL
        assert invariants.determinant(poly) == 3

    def test_lehmer_both_ways(self, invariants, lehmer_word):
        """Test Burau and Seifert agree on W(5)^3 W(3)"""
        assert invariants.alexander(lehmer_word) == LEHMER
        assert invariants.seifert_alexander(lehmer_word) == LEHMER
        assert invariants.determinant(LEHMER) == 1

    def test_seifert_trefoil(self, invariants):
        """Test the Seifert form of σ2σ1σ2σ1"""
        assert invariants.seifert_alexander(BraidWord(3, (2, 1, 2, 1))) == TREFOIL

    def test_figure_eight(self, invariants):
        """Test a non-positive word"""
        poly = invariants.alexander(BraidWord(3, (1, -2, 1, -2)))
        assert poly == LaurentPoly(0, (1, -3, 1))
        assert invariants.determinant(poly) == 5

    def test_mirror_has_same_polynomial(self, invariants, braids):
        """Test the mirror trefoil"""
        assert invariants.alexander((braids.W(3, 3) ** 2).inverse()) == TREFOIL

    def test_conjugation_invariance(self, invariants, braids):
        """Test conjugating by σ1 leaves Δ unchanged"""
        s1 = BraidWord(3, (1,))
        word = s1.inverse() * braids.W(3, 3) ** 2 * s1
        assert invariants.alexander(word) == TREFOIL

    def test_unknot(self, invariants):
        """Test the one-strand and σ1 closures"""
        assert invariants.alexander(BraidWord.empty(1)) == LaurentPoly(0, (1,))
        assert invariants.alexander(BraidWord(2, (1,))) == LaurentPoly(0, (1,))

    def test_link_rejected(self, invariants):
        """Test the Hopf link"""
        with pytest.raises(InvariantError):
            invariants.alexander(BraidWord(2, (1, 1)))

    def test_seifert_needs_positive(self, invariants):
        """Test the Seifert oracle refuses negative letters"""
        with pytest.raises(InvariantError, match="positive"):
            invariants.seifert_alexander(BraidWord(3, (1, -2, 1, -2)))

    def test_caps(self, braids, lehmer_word):
        """Test enforced caps reject oversized words"""
        service = InvariantService(braids, max_index=3, max_length=400)
        assert not service.within_caps(lehmer_word)
        with pytest.raises(InvariantError, match="caps"):
            service.alexander(lehmer_word, enforce_caps=True)


class TestTorus:
    """Test the torus-knot formula"""

    def test_torus_2_5(self, invariants):
        """Test Δ(T(2,5))"""
        assert invariants.torus_alexander(2, 5) == LaurentPoly(0, (1, -1, 1, -1, 1))

    def test_torus_matches_burau(self, invariants, braids):
        """Test T(3,4) from the formula and from W(3)^4"""
        assert invariants.torus_alexander(3, 4) == invariants.alexander(braids.W(3, 3) ** 4)

    def test_not_a_knot(self, invariants):
        """Test gcd > 1 is rejected"""
        with pytest.raises(ValidationError):
            invariants.torus_alexander(2, 4)


class TestProfile:
    """Test profiles and matching"""

    def test_full_profile(self, invariants, lehmer_word):
        """Test profile of a positive word"""
        profile = invariants.profile(lehmer_word)
        assert (profile.genus, profile.alexander, profile.determinant) == (5, LEHMER, 1)
        assert profile.positive_braid and profile.fibered
        assert profile.unknotting_number_bound == 5

    def test_non_positive_genus_from_span(self, invariants):
        """Test genus of the figure eight is half the span"""
        profile = invariants.profile(BraidWord(3, (1, -2, 1, -2)))
        assert profile.genus == 1
        assert not profile.positive_braid
        assert profile.unknotting_number_bound is None

    def test_partial_profile(self, braids, lehmer_word):
        """Test oversized positive words get a genus-only profile"""
        service = InvariantService(braids, max_index=3, max_length=400)
        profile = service.profile(lehmer_word)
        assert profile.partial
        assert profile.genus == 5

    def test_oversized_non_positive(self, braids):
        """Test oversized words with negative letters have no profile"""
        service = InvariantService(braids, max_index=3, max_length=400)
        word = braids.W(5, 5) ** 3 * braids.W(3, 5).inverse()
        with pytest.raises(InvariantError, match="Oversized"):
            service.profile(word)

    def test_same_profile(self, invariants, braids):
        """Test the closures of W(7)^4 W(3)^-1 and W(7)^3 W(5) agree"""
        first, second = braids.lemma24_pair(3, 7, 4)
        assert invariants.same_profile(first, second)

    def test_different_profiles(self, invariants, braids, lehmer_word):
        """Test the trefoil and the [3,5;3,4] knot differ"""
        assert not invariants.same_profile(braids.W(3, 3) ** 2, lehmer_word)
