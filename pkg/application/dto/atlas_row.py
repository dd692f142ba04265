"""
Atlas Row DTO
Data transfer objects for atlas rows and single-knot descriptions
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from domain.exceptions.atlas_errors import ValidationError


CHECK_NAMES = (
    "area_coef_gap",
    "lemma53_match",
    "immersed_arc",
    "genus_triple_match",
    "coef_positive",
    "gt_conjecture_window",
    "cor54_match",
    "moves_match",
)

FLAG_NAMES = ("mirror", "normalized", "trace_capped", "alexander_capped")

# Checks that report data without being asserted
REPORT_ONLY_CHECKS = frozenset({"gt_conjecture_window"})


@dataclass
class AtlasRow:
    """
    Atlas Row DTO

    One Berge parameter tuple with its region, braid and checks.
    Serialized with a fixed key order.
    """

    knot_type: str
    delta: int
    epsilon: int
    A: int
    k: int
    t: int
    a: int
    l: int
    B: int
    b: int
    coef: int
    region: Tuple[int, int, int, int]
    area: int
    double_points: int
    genus: int
    braid: str
    alexander: Optional[Dict[str, Any]] = None
    checks: Dict[str, bool] = field(default_factory=dict)
    flags: Dict[str, bool] = field(default_factory=dict)

    @property
    def label(self) -> str:
        return f"K_{self.knot_type}({self.delta}, {self.epsilon}, {self.A}, {self.k}, {self.t})"

    @property
    def failed_checks(self) -> List[str]:
        return [
            name for name in CHECK_NAMES
            if name not in REPORT_ONLY_CHECKS and not self.checks.get(name, False)
        ]

    @property
    def all_checks_pass(self) -> bool:
        return not self.failed_checks

    def to_dict(self) -> Dict[str, Any]:
        """Serializable dictionary in fixed key order"""
        return {
            "type": self.knot_type,
            "delta": self.delta,
            "epsilon": self.epsilon,
            "A": self.A,
            "k": self.k,
            "t": self.t,
            "a": self.a,
            "l": self.l,
            "B": self.B,
            "b": self.b,
            "coef": self.coef,
            "region": list(self.region),
            "area": self.area,
            "double_points": self.double_points,
            "genus": self.genus,
            "braid": self.braid,
            "alexander": self.alexander,
            "checks": {name: self.checks.get(name, False) for name in CHECK_NAMES},
            "flags": {name: self.flags.get(name, False) for name in FLAG_NAMES},
        }

    def to_flat_dict(self) -> Dict[str, Any]:
        """One-level dictionary for tabular reports"""
        data = self.to_dict()
        flat: Dict[str, Any] = {}
        for key, value in data.items():
            if key in ("checks", "flags"):
                for name, flag in value.items():
                    flat[f"{key}.{name}"] = flag
            elif key == "region":
                flat[key] = "[{},{};{},{}]".format(*value)
            elif key == "alexander":
                flat[key] = None if value is None else " ".join(str(c) for c in value["coef"])
            else:
                flat[key] = value
        return flat

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'AtlasRow':
        """
        Rebuild a row from its serialized form

        Raises:
            ValidationError: If required keys are missing
        """
        try:
            return cls(
                knot_type=str(data["type"]),
                delta=int(data["delta"]),
                epsilon=int(data["epsilon"]),
                A=int(data["A"]),
                k=int(data["k"]),
                t=int(data["t"]),
                a=int(data["a"]),
                l=int(data["l"]),
                B=int(data["B"]),
                b=int(data["b"]),
                coef=int(data["coef"]),
                region=tuple(int(x) for x in data["region"]),
                area=int(data["area"]),
                double_points=int(data["double_points"]),
                genus=int(data["genus"]),
                braid=str(data["braid"]),
                alexander=data.get("alexander"),
                checks=dict(data.get("checks", {})),
                flags=dict(data.get("flags", {})),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"Malformed atlas row: {e}", field="row")


@dataclass
class KnotDescription:
    """
    Knot Description DTO

    Everything the `knot` command prints for one tuple.
    """

    row: AtlasRow
    berge_braid: str
    cp_braid: str
    base_region: Tuple[int, int, int, int]
    moves: List[str] = field(default_factory=list)
    table2: Optional[Tuple[int, int]] = None
    np_parameters: Optional[Tuple[int, int]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "row": self.row.to_dict(),
            "berge_braid": self.berge_braid,
            "cp_braid": self.cp_braid,
            "base_region": list(self.base_region),
            "moves": list(self.moves),
            "table2": list(self.table2) if self.table2 else None,
            "np": list(self.np_parameters) if self.np_parameters else None,
        }
