"""
Unit Tests for Value Objects
Regions, braid words, Laurent polynomials and parameter types
"""

import pytest

from domain.exceptions.atlas_errors import ValidationError
from domain.value_objects.braid_word import BraidWord, format_macro
from domain.value_objects.knot_profile import KnotProfile
from domain.value_objects.knot_type import KnotType
from domain.value_objects.laurent_poly import LaurentPoly
from domain.value_objects.regions import LRegion, PlacedRegion, Rect, SquareEdge, SquareMove
from domain.value_objects.twisted_torus import TwistedTorus


LEHMER = LaurentPoly(0, (1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1))


class TestKnotType:
    """Test KnotType value object"""

    def test_constants(self):
        """Test a, minimum A and parity per Type"""
        assert [t.a for t in KnotType] == [0, 1, 1, 0]
        assert [t.min_A for t in KnotType] == [2, 5, 3, 4]

    def test_admits(self):
        """Test parity and lower bound of A"""
        assert KnotType.III.admits(2) and KnotType.III.admits(3)
        assert not KnotType.IV.admits(4)
        assert KnotType.IV.admits(5)
        assert not KnotType.V.admits(1)
        assert KnotType.VI.admits(4) and not KnotType.VI.admits(5)

    def test_from_string(self):
        """Test case-insensitive parsing"""
        assert KnotType.from_string(" vi ") == KnotType.VI
        with pytest.raises(ValidationError, match="Unknown knot type"):
            KnotType.from_string("VII")


class TestLRegion:
    """Test LRegion value object"""

    def test_valid_region(self):
        """Test creating a region and reading it back"""
        region = LRegion(3, 5, 3, 4)
        assert region.as_tuple() == (3, 5, 3, 4)
        assert str(region) == "[3,5;3,4]"

    def test_degenerate_region_raises_error(self):
        """Test a1 >= a2 or b1 >= b2 is rejected"""
        with pytest.raises(ValidationError, match="Degenerate"):
            LRegion(5, 5, 3, 4)
        with pytest.raises(ValidationError):
            LRegion(3, 5, 4, 4)

    def test_non_positive_side_raises_error(self):
        """Test zero and negative sides are rejected"""
        with pytest.raises(ValidationError, match="positive"):
            LRegion(0, 5, 3, 4)

    def test_parse(self):
        """Test both accepted notations"""
        assert LRegion.parse("3,5,3,4") == LRegion(3, 5, 3, 4)
        assert LRegion.parse("[11,13;16,17]") == LRegion(11, 13, 16, 17)
        with pytest.raises(ValidationError):
            LRegion.parse("3,5,3")

    def test_contains_cell(self):
        """Test cells of the two arms"""
        region = LRegion(3, 5, 3, 4)
        assert region.contains_cell(4, 2)
        assert region.contains_cell(2, 3)
        assert not region.contains_cell(4, 3)
        assert not region.contains_cell(-1, 0)

    def test_hashable(self):
        """Test regions can be used in sets"""
        assert len({LRegion(3, 5, 3, 4), LRegion(3, 5, 3, 4)}) == 1


class TestPlacedRegion:
    """Test PlacedRegion value object"""

    def test_concave_corner(self):
        """Test concave corner follows the offset"""
        placed = PlacedRegion(LRegion(3, 5, 3, 4), (1, 0))
        assert placed.concave_corner == (4, 3)

    def test_even_concave_corner_raises_error(self):
        """Test an even concave corner is rejected"""
        with pytest.raises(ValidationError, match="even point"):
            PlacedRegion(LRegion(3, 5, 3, 4), (0, 0))

    def test_cells_and_outline(self):
        """Test cell count equals area and the outline has six corners"""
        placed = PlacedRegion(LRegion(3, 5, 3, 4), (1, 0))
        assert len(list(placed.cells())) == 18
        assert len(placed.outline()) == 6
        assert placed.outline()[0] == (1, 0)

    def test_rectangle_has_no_concave_corner(self):
        """Test rectangles place anywhere"""
        placed = PlacedRegion(Rect(2, 3))
        assert (placed.width, placed.height) == (2, 3)
        with pytest.raises(ValidationError):
            _ = placed.concave_corner


class TestSquareMove:
    """Test SquareMove value object"""

    def test_zero_count_raises_error(self):
        """Test n = 0 is rejected"""
        with pytest.raises(ValidationError):
            SquareMove(SquareEdge.BOTTOM_A2, 0)

    def test_str(self):
        """Test signed rendering"""
        assert str(SquareMove(SquareEdge.SHORT_ARM_B1, 2)) == "+2 short_arm_b1"
        assert str(SquareMove(SquareEdge.BOTTOM_A2, -1, on_swapped=True)) == "-1 bottom_a2 (swapped)"

    def test_edge_from_string(self):
        """Test edge parsing"""
        assert SquareEdge.from_string("long_arm_b2") == SquareEdge.LONG_ARM_B2
        with pytest.raises(ValidationError):
            SquareEdge.from_string("diagonal")


class TestBraidWord:
    """Test BraidWord value object"""

    def test_descending(self):
        """Test W(n) letters and the empty W(1)"""
        assert BraidWord.descending(5, 5).letters == (4, 3, 2, 1)
        assert BraidWord.descending(1, 5).letters == ()

    def test_out_of_range_generator_raises_error(self):
        """Test generators must fit the index"""
        with pytest.raises(ValidationError, match="out of range"):
            BraidWord(3, (3,))
        with pytest.raises(ValidationError):
            BraidWord(3, (0,))

    def test_parse_macro(self):
        """Test macro notation with default index"""
        word = BraidWord.parse("W(5)^3 W(3)")
        assert word.index == 5
        assert word.letters == (4, 3, 2, 1) * 3 + (2, 1)

    def test_parse_inverse_macro(self):
        """Test negative W exponents invert the factor"""
        word = BraidWord.parse("W(7)^4 W(3)^-1", 7)
        assert word.letters[-2:] == (-1, -2)
        assert len(word) == 26

    def test_parse_expanded(self):
        """Test expanded notation with inverses and powers"""
        assert BraidWord.parse("s1 S2^2").letters == (1, -2, -2)
        assert BraidWord.parse("s1^-2").letters == (-1, -1)
        assert BraidWord.parse("e").letters == ()

    def test_parse_errors(self):
        """Test malformed words and small indices"""
        with pytest.raises(ValidationError, match="Cannot parse"):
            BraidWord.parse("x1")
        with pytest.raises(ValidationError, match="too small"):
            BraidWord.parse("W(5)", 3)

    def test_power_and_inverse(self):
        """Test powers, inverses and exponent sums"""
        w = BraidWord(3, (2, 1))
        assert (w ** 2).letters == (2, 1, 2, 1)
        assert (w ** -1).letters == (-1, -2)
        assert (w * w.inverse()).exponent_sum == 0
        assert w.is_positive and not w.inverse().is_positive

    def test_expanded(self):
        """Test expanded rendering"""
        assert BraidWord(3, (2, -1)).expanded() == "s2 S1"
        assert BraidWord.empty(2).expanded() == "e"

    def test_format_macro(self):
        """Test macro rendering drops zero exponents"""
        assert format_macro([(13, 16), (11, 1)]) == "W(13)^16 W(11)"
        assert format_macro([(5, 3), (3, 0)]) == "W(5)^3"
        assert format_macro([(5, 0)]) == "e"


class TestLaurentPoly:
    """Test LaurentPoly value object"""

    def test_canonical_trim(self):
        """Test leading and trailing zeros are removed"""
        poly = LaurentPoly(-1, (0, 1, 2, 0))
        assert (poly.lo, poly.coefficients) == (0, (1, 2))
        assert LaurentPoly(3, (0, 0)) == LaurentPoly()

    def test_arithmetic(self):
        """Test sum, difference and product"""
        one_minus_t = LaurentPoly(0, (1, -1))
        assert one_minus_t * LaurentPoly(0, (1, 1)) == LaurentPoly(0, (1, 0, -1))
        assert one_minus_t - one_minus_t == LaurentPoly()
        assert one_minus_t + LaurentPoly(1, (1,)) == LaurentPoly(0, (1,))

    def test_str(self):
        """Test human-readable rendering"""
        assert str(LEHMER) == "t^10 - t^9 + t^7 - t^6 + t^5 - t^4 + t^3 - t + 1"
        assert str(LaurentPoly(-1, (-2, 0, 1))) == "t - 2t^-1"
        assert str(LaurentPoly()) == "0"

    def test_evaluate(self):
        """Test evaluation and the determinant of the trefoil"""
        trefoil = LaurentPoly(0, (1, -1, 1))
        assert trefoil.evaluate(-1) == 3
        assert LEHMER.evaluate(-1) == -1
        with pytest.raises(ValidationError):
            LaurentPoly(-1, (1, 1)).evaluate(2)

    def test_normalized(self):
        """Test shift to degree 0 with positive constant term"""
        poly = LaurentPoly(-2, (-1, 1, -1))
        assert poly.normalized() == LaurentPoly(0, (1, -1, 1))
        assert poly.normalized().is_palindromic()

    def test_dict_round_trip(self):
        """Test serialized form"""
        assert LEHMER.to_dict() == {"lo": 0, "coef": [1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1]}
        assert LaurentPoly.from_dict(LEHMER.to_dict()) == LEHMER
        with pytest.raises(ValidationError):
            LaurentPoly.from_dict({"coef": [1]})


class TestTwistedTorus:
    """Test TwistedTorus value object"""

    def test_valid(self):
        """Test label of a valid knot"""
        assert TwistedTorus(4, 3, 5, 1).label() == "T(4,3;5,1)"

    def test_invalid(self):
        """Test gcd, r = p and positivity constraints"""
        with pytest.raises(ValidationError, match="not a knot"):
            TwistedTorus(4, 2, 3, 1)
        with pytest.raises(ValidationError, match="r != p"):
            TwistedTorus(4, 3, 4, 1)
        with pytest.raises(ValidationError):
            TwistedTorus(4, 3, 3, 0)


class TestKnotProfile:
    """Test KnotProfile matching"""

    def test_partial_profiles_compare_on_genus(self):
        """Test genus-only comparison when Δ is missing"""
        full = KnotProfile(1, LaurentPoly(0, (1, -1, 1)), 3, True)
        partial = KnotProfile(1, None, None, True)
        assert partial.partial
        assert full.matches(partial)
        assert not full.matches(KnotProfile(2, None, None, True))

    def test_full_profiles_compare_alexander(self):
        """Test Δ and determinant take part in matching"""
        trefoil = KnotProfile(1, LaurentPoly(0, (1, -1, 1)), 3, True)
        figure_eight = KnotProfile(1, LaurentPoly(0, (1, -3, 1)), 5, False)
        assert not trefoil.matches(figure_eight)
        assert trefoil.to_dict()["alexander"] == {"lo": 0, "coef": [1, -1, 1]}
