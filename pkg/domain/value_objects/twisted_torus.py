"""
Twisted Torus Knot Value Object
T(p, q; r, s): s full twists on r strands of the torus knot T(p, q)
"""

from dataclasses import dataclass
from math import gcd

from domain.exceptions.atlas_errors import ValidationError


@dataclass(frozen=True)
class TwistedTorus:
    """
    Twisted torus knot in Dean's convention

    For r < p the twists act on r of the p parallel strands; for r > p the
    standard braid of T(p, q) is first stabilized positively to r strands.
    """
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        for name in ("p", "q", "r", "s"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValidationError(
                    f"{name} must be a positive integer",
                    field=name,
                    value=value,
                    constraint=">= 1"
                )
        if gcd(self.p, self.q) != 1:
            raise ValidationError(
                f"T({self.p},{self.q}) is not a knot",
                field="q",
                value=self.q,
                constraint="gcd(p, q) = 1"
            )
        if self.r == self.p:
            raise ValidationError(
                "Twisting all p strands is a torus knot, not a twisted torus knot",
                field="r",
                value=self.r,
                constraint="r != p"
            )

    def label(self) -> str:
        return f"T({self.p},{self.q};{self.r},{self.s})"

    def __str__(self) -> str:
        return self.label()
