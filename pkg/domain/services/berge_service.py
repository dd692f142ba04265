"""
Berge Service
Domain service for Berge parameters of Types III-VI
"""

import logging
from typing import Tuple

from domain.exceptions.atlas_errors import ValidationError
from domain.value_objects.berge_params import BergeParams, BergeRecord
from domain.value_objects.braid_word import BraidWord
from domain.value_objects.knot_type import KnotType


logger = logging.getLogger(__name__)


# Forbidden values of ε·p in the (n, p) parametrization
_FORBIDDEN_EPS_P = {
    KnotType.III: frozenset({-1, 0}),
    KnotType.IV: frozenset({-2, -1, 0, 1}),
    KnotType.V: frozenset({-2, -1, 0, 1}),
    KnotType.VI: frozenset(),
}


def sgn(value: int) -> int:
    """Sign with sgn(0) = +1"""
    return -1 if value < 0 else 1


class BergeService:
    """
    Berge Service (Domain Service)

    Validates parameter tuples, derives the quantities a, l, B, b and
    the surgery coefficient, and provides the canonical sign choice and
    the (n, p) parameter translation.
    """

    def validate(
        self,
        knot_type: KnotType,
        delta: int,
        epsilon: int,
        A: int,
        k: int,
        t: int
    ) -> BergeParams:
        """
        Validate a parameter tuple

        Type VI tuples with (ε, k) != (-1, 0) are normalized to (-1, 0)
        and returned with the normalized flag set.

        Returns:
            Validated BergeParams

        Raises:
            ValidationError: If any parameter is out of range
        """
        if not isinstance(knot_type, KnotType):
            knot_type = KnotType.from_string(str(knot_type))
        for name, value in (("delta", delta), ("epsilon", epsilon)):
            if value not in (1, -1):
                raise ValidationError(
                    f"{name} must be a sign",
                    field=name,
                    value=value,
                    constraint="+1 or -1"
                )
        for name, value in (("A", A), ("k", k), ("t", t)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValidationError(f"{name} must be an integer", field=name, value=value)

        if not knot_type.admits(A):
            parity = {-1: "", 0: "even, ", 1: "odd, "}[knot_type.A_parity]
            raise ValidationError(
                f"Type {knot_type} needs A {parity}>= {knot_type.min_A}",
                field="A",
                value=A,
                constraint=f"{parity}>= {knot_type.min_A}"
            )

        normalized = False
        if knot_type == KnotType.VI:
            if (epsilon, k) != (-1, 0):
                logger.warning(
                    "Type VI fixes epsilon=-1 and k=0; normalizing (epsilon=%s, k=%s)",
                    epsilon, k
                )
                normalized = True
            epsilon, k = -1, 0
        elif k < 0:
            raise ValidationError("k must be non-negative", field="k", value=k, constraint=">= 0")

        return BergeParams(
            knot_type=knot_type,
            delta=delta,
            epsilon=epsilon,
            A=A,
            k=k,
            t=t,
            normalized=normalized
        )

    def derive(self, params: BergeParams) -> BergeRecord:
        """
        Derive a, l, B, b and the surgery coefficient bB + δA

        Raises:
            ValidationError: If the derived B does not exceed 2A
        """
        kt = params.knot_type
        delta, eps, A, k, t = params.delta, params.epsilon, params.A, params.k, params.t

        if kt == KnotType.III:
            l = 3 + 2 * k
            B = A * l - eps
            b = -delta * eps * (2 * A + t * B)
        elif kt == KnotType.IV:
            l = 5 + 2 * k
            if (A * l - eps) % 2:
                raise ValidationError(
                    "A*l - epsilon must be even for Type IV",
                    field="A",
                    value=A
                )
            B = (A * l - eps) // 2
            b = -delta * eps * (A + t * B)
        elif kt == KnotType.V:
            l = 2 + k if eps == 1 else 3 + k
            B = A * l + eps
            b = -delta * eps * (A + t * B)
        else:
            l = 2
            B = 2 * A + 1
            b = delta * (A - 1 + t * B)

        if B <= 2 * A:
            raise ValidationError(
                f"Derived B={B} does not exceed 2A={2 * A}",
                field="B",
                value=B,
                constraint="B > 2A"
            )

        return BergeRecord(
            params=params,
            a=kt.a,
            l=l,
            B=B,
            b=b,
            coef=b * B + delta * A
        )

    def record(
        self,
        knot_type: KnotType,
        delta: int,
        epsilon: int,
        A: int,
        k: int,
        t: int
    ) -> BergeRecord:
        """validate followed by derive"""
        return self.derive(self.validate(knot_type, delta, epsilon, A, k, t))

    def coef_closed_form(self, record: BergeRecord) -> int:
        """Surgery coefficient from the per-Type closed forms"""
        p = record.params
        delta, eps, A, k, t, B = p.delta, p.epsilon, p.A, p.k, p.t, record.B
        kt = record.knot_type

        if kt == KnotType.III:
            return -delta * eps * (6 * A * A - 3 * eps * A + 4 * k * A * A + t * B * B)
        if kt == KnotType.IV:
            return -delta * eps * ((5 * A * A - 3 * eps * A) // 2 + k * A * A + t * B * B)
        if kt == KnotType.V:
            if eps == 1:
                return -delta * (2 * A * A + k * A * A + t * B * B)
            return delta * (3 * A * A + k * A * A + t * B * B)
        return delta * (2 * A * A - 1 + t * B * B)

    def delta_choice(self, epsilon: int, t: int) -> int:
        """Sign δ_X = -ε·sgn(t) for which the coefficient is positive"""
        return -epsilon * sgn(t)

    def presented_delta(self, params: BergeParams) -> int:
        """δ of the knot presented by the region of this tuple"""
        return self.delta_choice(params.epsilon, params.t)

    def lemma53_gap(self, record: BergeRecord) -> int:
        """Expected area - |coef|: 0 when (-1)^a·ε·sgn(t) = +1, else 1"""
        p = record.params
        selector = (-1) ** record.a * p.epsilon * sgn(p.t)
        return 0 if selector == 1 else 1

    def translate_np(self, knot_type: KnotType, epsilon: int, n: int, p: int) -> Tuple[int, int]:
        """
        Translate (n, p) to (A, k)

        Raises:
            ValidationError: On forbidden ε·p, p < 1, a Type VI pair other than ε = -1, p = 1,
                or out-of-range results
        """
        if epsilon not in (1, -1):
            raise ValidationError("epsilon must be a sign", field="epsilon", value=epsilon)
        if knot_type == KnotType.VI:
            # Type VI is a single family in n: ε = -1 and p = 1 only
            if epsilon != -1:
                raise ValidationError(
                    "Type VI requires epsilon = -1", field="epsilon", value=epsilon, constraint="== -1"
                )
            if p != 1:
                raise ValidationError("Type VI requires p = 1", field="p", value=p, constraint="== 1")
        if p < 1:
            raise ValidationError("p must be positive", field="p", value=p, constraint=">= 1")
        if epsilon * p in _FORBIDDEN_EPS_P[knot_type]:
            raise ValidationError(
                f"epsilon*p={epsilon * p} is excluded for Type {knot_type}",
                field="p",
                value=p,
                constraint=f"epsilon*p not in {sorted(_FORBIDDEN_EPS_P[knot_type])}"
            )

        shift = {KnotType.III: 1, KnotType.IV: 2, KnotType.V: 2}
        if knot_type == KnotType.III:
            A = n + 1
        elif knot_type == KnotType.IV:
            A = 2 * n + 1
        elif knot_type == KnotType.V:
            A = 2 * n + 3
        else:
            A = 2 * n + 2

        k = 0 if knot_type == KnotType.VI else p - shift[knot_type] - (1 if epsilon == -1 else 0)
        if not knot_type.admits(A):
            raise ValidationError(
                f"n={n} gives A={A} outside Type {knot_type}",
                field="n",
                value=n
            )
        if k < 0:
            raise ValidationError(f"p={p} gives negative k", field="p", value=p)
        return A, k

    def translate_to_np(self, knot_type: KnotType, epsilon: int, A: int, k: int) -> Tuple[int, int]:
        """Inverse of translate_np; Type VI reports p = 1"""
        if knot_type == KnotType.III:
            return A - 1, k + 1 + (1 if epsilon == -1 else 0)
        if knot_type == KnotType.VI:
            return (A - 2) // 2, 1
        n = (A - 1) // 2 if knot_type == KnotType.IV else (A - 3) // 2
        return n, k + 2 + (1 if epsilon == -1 else 0)

    def berge_braid(self, record: BergeRecord) -> BraidWord:
        """W(B)^b W(A+1-a)^δ on B strands"""
        B = record.B
        return (
            BraidWord.descending(B, B) ** record.b
            * BraidWord.descending(record.m, B) ** record.params.delta
        )

    def table2_values(self, knot_type: KnotType, epsilon: int, A: int) -> Tuple[int, int]:
        """
        Printed (coef, area) of the k = t = 0 knot of a (Type, ε) row

        Values refer to the canonical sign δ_X, for which coef > 0.
        """
        sq = A * A
        if knot_type == KnotType.III:
            return (6 * sq - 3 * A, 6 * sq - 3 * A) if epsilon == 1 else (6 * sq + 3 * A, 6 * sq + 3 * A + 1)
        if knot_type == KnotType.IV:
            if epsilon == 1:
                value = (5 * sq - 3 * A) // 2
                return value, value + 1
            value = (5 * sq + 3 * A) // 2
            return value, value
        if knot_type == KnotType.V:
            return (2 * sq, 2 * sq + 1) if epsilon == 1 else (3 * sq, 3 * sq)
        return 2 * sq - 1, 2 * sq
