"""
Laurent Polynomial Value Object
Integer Laurent polynomials in one variable t
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from sympy import ZZ
from sympy.polys.rings import ring, PolyElement

from domain.exceptions.atlas_errors import ValidationError


# Shared polynomial ring Z[t]
T_RING, T = ring("t", ZZ)


@dataclass(frozen=True)
class LaurentPoly:
    """
    c_0 t^lo + c_1 t^(lo+1) + ... with integer coefficients

    Stored in canonical trim: first and last coefficients are nonzero,
    and the zero polynomial has an empty coefficient tuple with lo = 0.
    """
    lo: int = 0
    coefficients: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        lo = self.lo
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            lo += 1
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            lo = 0
        object.__setattr__(self, "coefficients", tuple(coeffs))
        object.__setattr__(self, "lo", lo)

    @classmethod
    def from_poly(cls, poly: PolyElement, shift: int = 0) -> 'LaurentPoly':
        """Build from an element of Z[t], multiplied by t^shift"""
        terms = {monom[0]: int(coeff) for monom, coeff in poly.items()}
        if not terms:
            return cls()
        lo = min(terms)
        hi = max(terms)
        return cls(lo + shift, tuple(terms.get(d, 0) for d in range(lo, hi + 1)))

    def to_poly(self) -> Tuple[PolyElement, int]:
        """
        Split into a polynomial part and a power of t

        Returns:
            (p, lo) with self = p * t^lo and p(0) != 0 unless self is zero
        """
        poly = T_RING.zero
        for i, c in enumerate(self.coefficients):
            poly += c * T**i
        return poly, self.lo

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def hi(self) -> int:
        return self.lo + len(self.coefficients) - 1

    @property
    def span(self) -> int:
        """Degree span hi - lo (0 for monomials and for zero)"""
        return max(len(self.coefficients) - 1, 0)

    def evaluate(self, value: int) -> int:
        """Evaluate at an integer; negative powers only at t = 1 or t = -1"""
        if self.lo < 0 and value not in (1, -1):
            raise ValidationError(
                "Negative powers only evaluate at t = 1 or t = -1",
                field="value",
                value=value
            )
        return int(sum(c * value ** abs(self.lo + i) for i, c in enumerate(self.coefficients)))

    def is_palindromic(self) -> bool:
        return self.coefficients == tuple(reversed(self.coefficients))

    def normalized(self) -> 'LaurentPoly':
        """Lowest degree 0 and positive constant term"""
        if self.is_zero:
            return self
        coeffs = self.coefficients
        if coeffs[0] < 0:
            coeffs = tuple(-c for c in coeffs)
        return LaurentPoly(0, coeffs)

    def __add__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return LaurentPoly(lo, tuple(self._at(d) + other._at(d) for d in range(lo, hi + 1)))

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly(self.lo, tuple(-c for c in self.coefficients))

    def __sub__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return self + (-other)

    def __mul__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        if self.is_zero or other.is_zero:
            return LaurentPoly()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return LaurentPoly(self.lo + other.lo, tuple(out))

    def _at(self, degree: int) -> int:
        i = degree - self.lo
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def to_dict(self) -> Dict[str, Any]:
        """Serialized form {"lo": .., "coef": [..]}"""
        return {"lo": self.lo, "coef": list(self.coefficients)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LaurentPoly':
        try:
            return cls(int(data["lo"]), tuple(int(c) for c in data["coef"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"Malformed polynomial: {e}", field="alexander", value=data)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms: List[str] = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            d = self.lo + i
            if d == 0:
                body = str(abs(c))
            else:
                power = "t" if d == 1 else f"t^{d}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign} {body}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]
