"""
Atlas Row Factory
Assembles an AtlasRow from the domain services
"""

import logging
from typing import Optional

from application.dto.atlas_row import AtlasRow
from domain.services.berge_service import BergeService
from domain.services.braid_service import BraidService
from domain.services.invariant_service import InvariantService
from domain.services.lshape_service import LShapeService
from domain.services.trace_service import TraceService
from domain.value_objects.braid_word import format_macro
from domain.value_objects.knot_type import KnotType


logger = logging.getLogger(__name__)


class AtlasRowFactory:
    """
    Builds one atlas row per parameter tuple

    Regions above trace_max_area are not lattice-traced; their knot
    check falls back to the closure permutation of the braid.
    """

    def __init__(
        self,
        berge_service: BergeService,
        lshape_service: LShapeService,
        trace_service: TraceService,
        braid_service: BraidService,
        invariant_service: InvariantService,
        trace_max_area: int = 5000
    ):
        self.berge = berge_service
        self.lshape = lshape_service
        self.tracer = trace_service
        self.braids = braid_service
        self.invariants = invariant_service
        self.trace_max_area = trace_max_area

    def with_caps(self, max_index: int, max_length: int, trace_max_area: int) -> 'AtlasRowFactory':
        """Copy of this factory with other Alexander and trace caps"""
        return AtlasRowFactory(
            self.berge,
            self.lshape,
            self.tracer,
            self.braids,
            InvariantService(self.braids, max_index=max_index, max_length=max_length),
            trace_max_area=trace_max_area
        )

    def build(
        self,
        knot_type: KnotType,
        epsilon: int,
        A: int,
        k: int,
        t: int,
        delta: Optional[int] = None
    ) -> AtlasRow:
        """
        Row for a tuple; δ defaults to the canonical sign δ_X

        With another δ the row carries that record and the mirror flag:
        its region presents K(δ_X, ...), the mirror image.

        Raises:
            ValidationError: If the tuple is invalid
        """
        params = self.berge.validate(knot_type, delta if delta is not None else 1, epsilon, A, k, t)
        canonical = self.berge.presented_delta(params)
        requested = delta if delta is not None else canonical
        record = self.berge.derive(params.with_delta(requested))
        params = record.params

        region = self.lshape.region_of(record)
        area = self.lshape.area(region)
        double_points = self.lshape.double_points(region)
        braid = self.braids.cp_braid(region)
        genus = self.invariants.bennequin_genus(braid)

        trace_capped = area > self.trace_max_area
        if trace_capped:
            logger.info("Trace skipped for %s (area %d)", record.label(), area)
            immersed = self.braids.closure_components(braid) == 1
            genus_triple = double_points == genus
        else:
            trace = self.tracer.trace(self.tracer.place(region))
            immersed = self.tracer.is_immersed_arc(trace)
            genus_triple = trace.double_point_count == double_points == genus

        alexander = None
        alexander_capped = not self.invariants.within_caps(braid)
        if not alexander_capped:
            alexander = self.invariants.alexander(braid).to_dict()

        magnitude = abs(record.coef)
        canonical_coef = record.coef * requested * canonical
        gap = area - magnitude

        base, moves = self.lshape.region_by_moves(
            params.knot_type, params.epsilon, params.A, params.k, params.t
        )
        arms = region.a2 + region.b2

        checks = {
            "area_coef_gap": gap in (0, 1),
            "lemma53_match": gap == self.berge.lemma53_gap(record),
            "immersed_arc": immersed,
            "genus_triple_match": genus_triple,
            "coef_positive": canonical_coef > 0,
            "gt_conjecture_window": 2 * genus + 8 <= magnitude <= 4 * genus - 1,
            "cor54_match": gap in (0, 1) and magnitude - 2 * genus == arms - 1 - gap,
            "moves_match": self.lshape.apply_moves(base, moves) == region,
        }
        flags = {
            "mirror": requested != canonical,
            "normalized": params.normalized,
            "trace_capped": trace_capped,
            "alexander_capped": alexander_capped,
        }

        return AtlasRow(
            knot_type=params.knot_type.value,
            delta=params.delta,
            epsilon=params.epsilon,
            A=params.A,
            k=params.k,
            t=params.t,
            a=record.a,
            l=record.l,
            B=record.B,
            b=record.b,
            coef=record.coef,
            region=region.as_tuple(),
            area=area,
            double_points=double_points,
            genus=genus,
            braid=format_macro(self.braids.cp_factors(region)),
            alexander=alexander,
            checks=checks,
            flags=flags
        )

    def rebuild(self, row: AtlasRow) -> AtlasRow:
        """Recompute a row from its parameter columns"""
        return self.build(
            KnotType.from_string(row.knot_type),
            row.epsilon,
            row.A,
            row.k,
            row.t,
            delta=row.delta
        )
