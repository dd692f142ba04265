"""
L-Shape Service
Domain service for the L-shaped region calculus
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from domain.exceptions.atlas_errors import RegionError
from domain.services.berge_service import BergeService
from domain.value_objects.berge_params import BergeRecord
from domain.value_objects.knot_type import KnotType
from domain.value_objects.regions import LRegion, Rect, Region, SquareEdge, SquareMove
from domain.value_objects.relation import Relation


logger = logging.getLogger(__name__)


class LShapeService:
    """
    L-Shape Service (Domain Service)

    Area and double-point formulas, adding-squares moves, the region of
    a Berge knot (closed form and by moves), and relation search.
    """

    def __init__(self, berge_service: Optional[BergeService] = None):
        self.berge = berge_service or BergeService()

    def area(self, region: Region) -> int:
        if isinstance(region, Rect):
            return region.a * region.b
        return region.a2 * region.b1 + region.a1 * region.b2 - region.a1 * region.b1

    def double_points(self, region: Region) -> int:
        """
        Number of double points of the divide

        Raises:
            RegionError: If the numerator is odd (no placement keeps the
                curve an immersed arc)
        """
        if isinstance(region, Rect):
            return (region.a - 1) * (region.b - 1) // 2
        r = region
        numerator = r.a2 * (r.b1 - 1) + r.b2 * (r.a1 - 1) - r.a1 * r.b1 + 1
        if numerator % 2:
            raise RegionError(
                "Odd double-point numerator",
                region=str(r),
                operation="double_points"
            )
        return numerator // 2

    def swap(self, region: LRegion) -> LRegion:
        """[b1, b2; a1, a2]"""
        return LRegion(region.b1, region.b2, region.a1, region.a2)

    def add_squares(
        self,
        region: LRegion,
        move: SquareMove,
        literal_top_edge: bool = False
    ) -> LRegion:
        """
        Glue n squares along an edge

        Args:
            region: Source region
            move: Edge and count
            literal_top_edge: Grow b2 by n*a2 instead of n*a1 on the top edge

        Raises:
            RegionError: If a negative move is applied outside its shape
        """
        a1, a2, b1, b2 = region.as_tuple()
        n = move.n
        if n < 0:
            return self._add_negative(region, move)

        if move.edge == SquareEdge.SHORT_ARM_B1:
            return LRegion(a1, a2 + n * b1, b1, b2)
        if move.edge == SquareEdge.LONG_ARM_B2:
            return LRegion(a1 + n * b2, a2 + n * b2, b1, b2)
        if move.edge == SquareEdge.BOTTOM_A2:
            return LRegion(a1, a2, b1 + n * a2, b2 + n * a2)
        width = a2 if literal_top_edge else a1
        return LRegion(a1, a2, b1, b2 + n * width)

    def _add_negative(self, region: LRegion, move: SquareMove) -> LRegion:
        a1, a2, b1, b2 = region.as_tuple()
        count = -move.n
        if move.edge != SquareEdge.BOTTOM_A2:
            raise RegionError(
                "Negative squares only along the bottom edge",
                region=str(region),
                operation=str(move)
            )
        if b2 != b1 + 1 or count * a2 <= b1 + 1:
            raise RegionError(
                "Negative move needs b2 = b1 + 1 and |n|*a2 > b1 + 1",
                region=str(region),
                operation=str(move)
            )
        if a1 == 1:
            raise RegionError(
                "Negative move degenerates to a rectangle",
                region=str(region),
                operation=str(move)
            )
        return LRegion(a2 - a1 + 1, a2, count * a2 - b1 - 1, count * a2 - b1)

    def apply_moves(self, base: LRegion, moves: Sequence[SquareMove]) -> LRegion:
        region = base
        for move in moves:
            if move.on_swapped:
                region = self.swap(region)
            region = self.add_squares(region, move)
        return region

    def region_for(self, knot_type: KnotType, epsilon: int, A: int, k: int, t: int) -> LRegion:
        """
        Closed-form region presenting K(δ_X, ε, A, k, t)

        Raises:
            RegionError: If b at δ_X is not positive
        """
        params = self.berge.validate(knot_type, 1, epsilon, A, k, t)
        # after VI normalization, so the sign follows the stored epsilon
        delta = self.berge.presented_delta(params)
        return self.region_of(self.berge.derive(params.with_delta(delta)))

    def region_of(self, record: BergeRecord) -> LRegion:
        """Region of a record, built at the canonical sign of its tuple"""
        params = record.params
        delta = self.berge.presented_delta(params)
        if params.delta != delta:
            record = self.berge.derive(params.with_delta(delta))
        b, B, m = record.b, record.B, record.m
        if b <= 0 or (delta == -1 and b < 2):
            raise RegionError(
                f"Non-positive exponent b={b} at the canonical sign",
                region=record.label(),
                operation="region_for"
            )
        if delta == 1:
            return LRegion(m, B, b, b + 1)
        return LRegion(B - m + 1, B, b - 1, b)

    def region_by_moves(
        self,
        knot_type: KnotType,
        epsilon: int,
        A: int,
        k: int,
        t: int
    ) -> Tuple[LRegion, List[SquareMove]]:
        """
        Base region of the (Type, ε) row and the moves reaching the tuple

        k squares come first (long arm for ε = 1, short arm for ε = -1),
        then t squares along the bottom edge.
        """
        params = self.berge.validate(knot_type, 1, epsilon, A, k, t)
        epsilon, k = params.epsilon, params.k
        base = self.region_for(knot_type, epsilon, A, 0, 0)
        moves: List[SquareMove] = []
        if k:
            edge = SquareEdge.LONG_ARM_B2 if epsilon == 1 else SquareEdge.SHORT_ARM_B1
            moves.append(SquareMove(edge, k))
        if t:
            moves.append(SquareMove(SquareEdge.BOTTOM_A2, t))
        return base, moves

    def relation_search(self, rec1: BergeRecord, rec2: BergeRecord) -> Optional[SquareMove]:
        """Single move carrying region_of(rec1) to region_of(rec2), up to swap"""
        return self.find_move(self.region_of(rec1), self.region_of(rec2))

    def find_move(self, source: LRegion, target: LRegion) -> Optional[SquareMove]:
        move = self._solve(source, target)
        if move is not None:
            return move
        move = self._solve(self.swap(source), target)
        if move is not None:
            return SquareMove(move.edge, move.n, on_swapped=True)
        return None

    def _solve(self, r: LRegion, s: LRegion) -> Optional[SquareMove]:
        da1, da2 = s.a1 - r.a1, s.a2 - r.a2
        db1, db2 = s.b1 - r.b1, s.b2 - r.b2

        candidates: List[SquareMove] = []
        if da1 == 0 and db1 == 0 and db2 == 0 and da2 > 0 and da2 % r.b1 == 0:
            candidates.append(SquareMove(SquareEdge.SHORT_ARM_B1, da2 // r.b1))
        if db1 == 0 and db2 == 0 and da1 == da2 and da1 > 0 and da1 % r.b2 == 0:
            candidates.append(SquareMove(SquareEdge.LONG_ARM_B2, da1 // r.b2))
        if da1 == 0 and da2 == 0 and db1 == db2 and db1 > 0 and db1 % r.a2 == 0:
            candidates.append(SquareMove(SquareEdge.BOTTOM_A2, db1 // r.a2))
        if da1 == 0 and da2 == 0 and db1 == 0 and db2 > 0 and db2 % r.a1 == 0:
            candidates.append(SquareMove(SquareEdge.TOP_A1, db2 // r.a1))

        if (
            r.b2 == r.b1 + 1 and s.b2 == s.b1 + 1
            and s.a2 == r.a2 and s.a1 == r.a2 - r.a1 + 1
            and (s.b1 + r.b1 + 1) % r.a2 == 0
        ):
            count = (s.b1 + r.b1 + 1) // r.a2
            if count * r.a2 > r.b1 + 1:
                candidates.append(SquareMove(SquareEdge.BOTTOM_A2, -count))

        for move in candidates:
            try:
                if self.add_squares(r, move) == s:
                    return move
            except RegionError:
                continue
        return None

    def base_records(self, max_A: int, types: Iterable[KnotType] = tuple(KnotType)) -> List[BergeRecord]:
        """Canonical k = t = 0 records with A <= max_A"""
        records = []
        for knot_type in types:
            epsilons = (-1,) if knot_type == KnotType.VI else (-1, 1)
            for epsilon in epsilons:
                for A in range(knot_type.min_A, max_A + 1):
                    if knot_type.admits(A):
                        delta = self.berge.delta_choice(epsilon, 0)
                        records.append(self.berge.record(knot_type, delta, epsilon, A, 0, 0))
        return records

    def discover_relations(self, max_A: int, max_k: int) -> List[Relation]:
        """
        Exhaustive single-move search between base records and k-families

        Sources are k = t = 0 records with A <= max_A; targets are t = 0
        records of another (Type, ε) row with A <= 2*max_A + 1 and k <= max_k.
        """
        regions: Dict[Tuple, LRegion] = {}

        def region(record: BergeRecord) -> LRegion:
            key = (record.knot_type, record.params.epsilon, record.params.A, record.params.k)
            if key not in regions:
                regions[key] = self.region_of(record)
            return regions[key]

        targets: List[BergeRecord] = []
        for knot_type in KnotType:
            epsilons = (-1,) if knot_type == KnotType.VI else (-1, 1)
            ks = (0,) if knot_type == KnotType.VI else range(max_k + 1)
            for epsilon in epsilons:
                for A in range(knot_type.min_A, 2 * max_A + 2):
                    if not knot_type.admits(A):
                        continue
                    for k in ks:
                        delta = self.berge.delta_choice(epsilon, 0)
                        targets.append(self.berge.record(knot_type, delta, epsilon, A, k, 0))

        found: List[Relation] = []
        for source in self.base_records(max_A):
            source_row = (source.knot_type, source.params.epsilon)
            for target in targets:
                if (target.knot_type, target.params.epsilon) == source_row:
                    continue
                move = self.find_move(region(source), region(target))
                if move is not None:
                    found.append(Relation(source, target, region(source), region(target), move))
        logger.info("Relation discovery found %d single-move relations", len(found))
        return found

    def printed_relations(self, max_A: int, max_k: int) -> List[Tuple[BergeRecord, BergeRecord, SquareMove]]:
        """
        Expected moves of the printed relation families

        K_III(ε=1, A) gains k+1 squares on the short arm to reach
        K_IV(ε=-1, 2A-1, k); K_III(ε=-1, A) gains k+1 on the long arm to
        reach K_IV(ε=1, 2A+1, k); K_III(ε=1, 2) reaches K_V(ε=-1, 3, k)
        with k+1 squares on the short arm. Records use δ = δ_X.
        """
        expected: List[Tuple[BergeRecord, BergeRecord, SquareMove]] = []
        for A in range(KnotType.III.min_A, max_A + 1):
            short_source = self.berge.record(KnotType.III, -1, 1, A, 0, 0)
            long_source = self.berge.record(KnotType.III, 1, -1, A, 0, 0)
            for k in range(max_k + 1):
                if KnotType.IV.admits(2 * A - 1):
                    target = self.berge.record(KnotType.IV, 1, -1, 2 * A - 1, k, 0)
                    expected.append((short_source, target, SquareMove(SquareEdge.SHORT_ARM_B1, k + 1)))
                if KnotType.IV.admits(2 * A + 1):
                    target = self.berge.record(KnotType.IV, -1, 1, 2 * A + 1, k, 0)
                    expected.append((long_source, target, SquareMove(SquareEdge.LONG_ARM_B2, k + 1)))

        source = self.berge.record(KnotType.III, -1, 1, 2, 0, 0)
        for k in range(max_k + 1):
            target = self.berge.record(KnotType.V, 1, -1, 3, k, 0)
            expected.append((source, target, SquareMove(SquareEdge.SHORT_ARM_B1, k + 1)))
        return expected
