"""
Unit Tests for the Braid Service
Region braids, conjugators, handle reduction and closures
"""

import pytest

from domain.exceptions.atlas_errors import ReductionBudgetExceeded, ValidationError
from domain.services.braid_service import BraidService
from domain.services.handle_reduction import HandleReducer
from domain.value_objects.braid_word import BraidWord
from domain.value_objects.regions import LRegion


class TestBuildingBlocks:
    """Test W, ρ, e and o"""

    def test_w(self, braids):
        """Test descending products"""
        assert braids.W(4, 6).letters == (3, 2, 1)
        assert braids.W(4, 6).index == 6

    def test_rho(self, braids):
        """Test ρ(σ1) on three strands is σ2"""
        assert braids.rho(BraidWord(3, (1,))) == BraidWord(3, (2,))
        assert braids.rho(BraidWord(4, (1, -2))) == BraidWord(4, (-2, 3))

    def test_even_and_odd(self, braids):
        """Test e(n) and o(n)"""
        assert braids.e(6, 6).letters == (2, 4)
        assert braids.o(6, 6).letters == (1, 3, 5)
        assert braids.alternating(5, 3, 5).letters == (2, 4, 1, 3)
        assert braids.alternating(5, 2, 5).letters == (1, 3, 2, 4)


class TestRegionBraids:
    """Test cp_braid and the alternating form"""

    def test_cp_braid(self, braids):
        """Test W(5)^3 W(3) for [3,5;3,4]"""
        region = LRegion(3, 5, 3, 4)
        assert braids.cp_braid(region) == braids.W(5, 5) ** 3 * braids.W(3, 5)
        assert braids.cp_factors(region) == [(5, 3), (3, 1)]

    def test_claim1_odd(self, braids):
        """Test [3,5;3,4] reads (σ2σ4σ1σ3)^3 σ2σ1"""
        word = braids.claim1_braid(LRegion(3, 5, 3, 4))
        assert word.letters == (2, 4, 1, 3) * 3 + (2, 1)

    def test_claim1_even(self, braids):
        """Test [2,3;1,2] reads σ1σ2σ1"""
        assert braids.claim1_braid(LRegion(2, 3, 1, 2)).letters == (1, 2, 1)

    @pytest.mark.parametrize("region", [
        LRegion(2, 3, 1, 2),
        LRegion(3, 5, 3, 4),
        LRegion(3, 6, 2, 4),
        LRegion(2, 5, 1, 3),
    ])
    def test_conjugated_claim1(self, braids, region):
        """Test Ω carries the alternating form to W(a1) W(a2)^b1 W(a1)^(b2-b1-1)"""
        assert braids.conjugated_claim1_holds(region)


class TestConjugators:
    """Test G, H and Ω"""

    def test_g(self, braids):
        """Test G(3) = σ2σ1 and G(2) = σ1"""
        assert braids.G(3, 4).letters == (2, 1)
        assert braids.G(2, 4).letters == (1,)
        assert braids.G(1, 4).letters == ()

    def test_h(self, braids):
        """Test H(3,6) = ρ(G(2)) = σ5"""
        assert braids.H(3, 6) == BraidWord(6, (5,))

    def test_conjugators_empty(self, braids):
        """Test (3, 5) has empty conjugators"""
        g, h, om = braids.conjugators(3, 5)
        assert (len(g), len(h), len(om)) == (0, 0, 0)

    def test_conjugators_range(self, braids):
        """Test a1 >= a2 is rejected"""
        with pytest.raises(ValidationError, match="1 <= a1 < a2"):
            braids.conjugators(5, 5)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_claim2(self, braids, n):
        """Test G(n-2) conjugates the alternating word to W(n)"""
        assert braids.claim2_holds(n)

    @pytest.mark.parametrize("a1, a2", [
        (a1, a2) for a2 in range(2, 7) for a1 in range(1, a2)
    ])
    def test_claims_3_to_5(self, braids, a1, a2):
        """Test H commutes and Ω conjugates both alternating factors"""
        assert braids.claim3_holds(a1, a2)
        assert braids.claim4_holds(a1, a2)
        assert braids.claim5_holds(a1, a2)


class TestHandleReduction:
    """Test the word problem"""

    def test_reduce_to_positive(self, braids):
        """Test W(5) W(3)^-1 reduces to σ4σ3"""
        reduced = braids.handle_reduce(braids.W(5, 5) * braids.W(3, 5).inverse())
        assert reduced.word.letters == (4, 3)
        assert not reduced.trivial
        assert reduced.sigma_positive is True

    def test_reduce_to_negative(self, braids):
        """Test σ1^-1 σ2 stays σ-negative"""
        reduced = braids.handle_reduce(BraidWord(3, (-1, 2)))
        assert reduced.sigma_positive is False

    def test_trivial(self, braids):
        """Test w w^-1 is trivial"""
        word = braids.W(5, 5) ** 2
        assert braids.handle_reduce(word * word.inverse()).trivial

    def test_braid_relation(self, braids):
        """Test σ1σ2σ1 = σ2σ1σ2 and σ1 != σ2"""
        assert braids.equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
        assert not braids.equal(BraidWord(3, (1,)), BraidWord(3, (2,)))

    def test_equal_across_indices(self, braids):
        """Test words of different index compare on the larger one"""
        assert braids.equal(BraidWord(2, (1,)), BraidWord(4, (1,)))

    def test_budget_exceeded(self):
        """Test a tiny budget leaves the word problem undecided"""
        service = BraidService(HandleReducer(budget=1))
        with pytest.raises(ReductionBudgetExceeded, match="budget"):
            service.handle_reduce(service.W(5, 5) * service.W(3, 5).inverse())


class TestClosures:
    """Test permutations, components and linking"""

    def test_permutation(self, braids):
        """Test the strand permutation of W(3)"""
        assert braids.permutation(braids.W(3, 3)) == [1, 2, 0]

    def test_closure_components(self, braids):
        """Test knots and the Hopf link"""
        assert braids.closure_components(braids.W(5, 5) ** 3 * braids.W(3, 5)) == 1
        assert braids.closure_components(BraidWord(2, (1, 1))) == 2
        assert braids.closure_components(braids.W(6, 6) ** 5) == 1

    def test_linking_numbers(self, braids):
        """Test the Hopf link has linking number 1"""
        assert braids.linking_numbers(BraidWord(2, (1, 1))) == {(0, 1): 1}
        assert braids.linking_numbers(BraidWord(2, (-1, -1))) == {(0, 1): -1}

    def test_full_twist(self, braids):
        """Test one full twist on two strands"""
        assert braids.full_twist(BraidWord.empty(2), 2, 1).letters == (1, 1)

    def test_full_twist_range(self, braids):
        """Test twists wider than the word are rejected"""
        with pytest.raises(ValidationError):
            braids.full_twist(BraidWord.empty(2), 3, 1)


class TestMirrorCase:
    """Test regions for W(a2)^c W(a1)^δ"""

    def test_mixed_signs(self, braids):
        """Test (+-) uses [a2-a1+1, a2; c-1, c]"""
        assert braids.mirror_case(4, -1, 3, 7) == (LRegion(5, 7, 3, 4), False)

    def test_same_signs_negative(self, braids):
        """Test (--) is the mirror of [a1, a2; |c|, |c|+1]"""
        assert braids.mirror_case(-3, -1, 2, 5) == (LRegion(2, 5, 3, 4), True)

    def test_invalid(self, braids):
        """Test c = 0 and |c| = 1 in the mixed case"""
        with pytest.raises(ValidationError):
            braids.mirror_case(0, 1, 2, 5)
        with pytest.raises(ValidationError, match="\\|c\\| >= 2"):
            braids.mirror_case(1, -1, 2, 5)

    def test_lemma24_pair(self, braids):
        """Test the pair W(7)^4 W(3)^-1 and W(7)^3 W(5)"""
        first, second = braids.lemma24_pair(3, 7, 4)
        assert first == braids.W(7, 7) ** 4 * braids.W(3, 7).inverse()
        assert second == braids.W(7, 7) ** 3 * braids.W(5, 7)
