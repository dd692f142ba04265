"""
Berge Parameter Value Objects
Validated parameter tuples and their derived quantities
"""

from dataclasses import dataclass

from domain.value_objects.knot_type import KnotType


@dataclass(frozen=True)
class BergeParams:
    """
    Validated Berge parameters (δ, ε, A, k, t) of a given Type

    Instances are produced by BergeService.validate; Type VI is stored
    with the formal values ε = -1 and k = 0.
    """
    knot_type: KnotType
    delta: int
    epsilon: int
    A: int
    k: int
    t: int
    normalized: bool = False

    def with_delta(self, delta: int) -> 'BergeParams':
        """Same tuple with another δ"""
        return BergeParams(
            knot_type=self.knot_type,
            delta=delta,
            epsilon=self.epsilon,
            A=self.A,
            k=self.k,
            t=self.t,
            normalized=self.normalized
        )

    def label(self) -> str:
        """Human-readable label, e.g. K_III(1, 1, 2, 2, 1)"""
        return (
            f"K_{self.knot_type.value}"
            f"({self.delta}, {self.epsilon}, {self.A}, {self.k}, {self.t})"
        )

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class BergeRecord:
    """
    Berge parameters together with every derived quantity

    Attributes:
        params: Validated parameters
        a: Berge's constant (0 for III and VI, 1 for IV and V)
        l: Type parameter l (Type VI carries l = 2, matching B = 2A + 1)
        B: Braid index of the Berge presentation
        b: Exponent of W(B) in the Berge presentation
        coef: Surgery coefficient bB + δA
    """
    params: BergeParams
    a: int
    l: int
    B: int
    b: int
    coef: int

    @property
    def knot_type(self) -> KnotType:
        return self.params.knot_type

    @property
    def m(self) -> int:
        """Index of the second braid factor, A + 1 - a"""
        return self.params.A + 1 - self.a

    def label(self) -> str:
        return self.params.label()
