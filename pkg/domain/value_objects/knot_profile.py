"""
Knot Profile Value Object
Bundle of computable invariants of a braid closure
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from domain.value_objects.laurent_poly import LaurentPoly


@dataclass(frozen=True)
class KnotProfile:
    """
    Invariants used to witness knot equivalences

    Attributes:
        genus: Seifert genus (Bennequin count for positive words,
            half the Alexander span otherwise)
        alexander: Normalized Alexander polynomial, None when the word
            exceeds the Alexander size caps
        determinant: |Δ(-1)|, None together with alexander
        positive_braid: Whether the source word is positive
        fibered: Recorded for positive-braid closures (divide knots are fibered)
        unknotting_number_bound: Equal to the genus for divide knots; recorded only
    """
    genus: int
    alexander: Optional[LaurentPoly]
    determinant: Optional[int]
    positive_braid: bool
    fibered: bool = False
    unknotting_number_bound: Optional[int] = None

    @property
    def partial(self) -> bool:
        """True when only the genus is available"""
        return self.alexander is None

    def matches(self, other: 'KnotProfile') -> bool:
        """
        Compare the mirror-invariant parts: genus, Δ and determinant

        Partial profiles compare on genus alone.
        """
        if self.genus != other.genus:
            return False
        if self.partial or other.partial:
            return True
        return self.alexander == other.alexander and self.determinant == other.determinant

    def to_dict(self) -> Dict[str, Any]:
        return {
            "genus": self.genus,
            "alexander": self.alexander.to_dict() if self.alexander is not None else None,
            "determinant": self.determinant,
            "positive_braid": self.positive_braid,
            "fibered": self.fibered,
            "unknotting_number_bound": self.unknotting_number_bound,
        }
