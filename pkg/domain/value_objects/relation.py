"""
Relation Value Object
A single adding-squares move linking two Berge knots
"""

from dataclasses import dataclass

from domain.value_objects.berge_params import BergeRecord
from domain.value_objects.regions import LRegion, SquareMove


@dataclass(frozen=True)
class Relation:
    """Move carrying the region of `source` to the region of `target`"""
    source: BergeRecord
    target: BergeRecord
    source_region: LRegion
    target_region: LRegion
    move: SquareMove

    def describe(self) -> str:
        return f"{self.source.label()} -> {self.target.label()}: {self.move}"
