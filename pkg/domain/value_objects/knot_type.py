"""
Berge Knot Type Value Object
Enumeration of the doubly-primitive families handled by the atlas
"""

from enum import Enum

from domain.exceptions.atlas_errors import ValidationError


class KnotType(Enum):
    """
    Berge knot Types covered by L-shaped divide presentations

    Each Type fixes the constant a, the parity and lower bound of A,
    and the formulas for l, B and b.
    """
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"

    @property
    def a(self) -> int:
        """Berge's constant a (0 or 1)"""
        return 1 if self in (KnotType.IV, KnotType.V) else 0

    @property
    def min_A(self) -> int:
        """Smallest admissible A"""
        return {
            KnotType.III: 2,
            KnotType.IV: 5,
            KnotType.V: 3,
            KnotType.VI: 4,
        }[self]

    @property
    def A_parity(self) -> int:
        """Required parity of A, or -1 when any parity is allowed"""
        return {
            KnotType.III: -1,
            KnotType.IV: 1,
            KnotType.V: 1,
            KnotType.VI: 0,
        }[self]

    def admits(self, A: int) -> bool:
        """Check whether A lies in the range of this Type"""
        if A < self.min_A:
            return False
        return self.A_parity < 0 or A % 2 == self.A_parity

    @classmethod
    def from_string(cls, value: str) -> 'KnotType':
        """
        Parse a Type tag such as "III" or "vi"

        Raises:
            ValidationError: If the tag is unknown
        """
        tag = (value or "").strip().upper()
        for member in cls:
            if member.value == tag:
                return member
        raise ValidationError(
            f"Unknown knot type: {value}",
            field="knot_type",
            value=value,
            constraint="one of III, IV, V, VI"
        )

    def __str__(self) -> str:
        return self.value
