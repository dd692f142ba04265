"""
Describe Knot Use Case
Everything known about a single Berge parameter tuple
"""

from typing import Optional

from application.dto.atlas_row import KnotDescription
from application.use_cases.row_factory import AtlasRowFactory
from domain.services.berge_service import BergeService
from domain.services.braid_service import BraidService
from domain.services.lshape_service import LShapeService
from domain.value_objects.braid_word import format_macro
from domain.value_objects.knot_type import KnotType
from infrastructure.logging.audit_logger import AuditLogger


class DescribeKnotUseCase:
    """
    Describe Knot Use Case

    Validates one tuple and assembles its atlas row together with the
    Berge braid, the region's braid, the move sequence from the base
    region and, where they apply, the closed-form table values and the
    (n, p) parameters.
    """

    def __init__(
        self,
        row_factory: AtlasRowFactory,
        berge_service: BergeService,
        lshape_service: LShapeService,
        braid_service: BraidService,
        audit_logger: AuditLogger
    ):
        self._rows = row_factory
        self._berge = berge_service
        self._lshape = lshape_service
        self._braids = braid_service
        self._audit_logger = audit_logger

    def execute(
        self,
        knot_type: KnotType,
        epsilon: int,
        A: int,
        k: int,
        t: int,
        delta: Optional[int] = None
    ) -> KnotDescription:
        """
        Describe one tuple

        Raises:
            ValidationError: If the tuple is invalid
        """
        try:
            row = self._rows.build(knot_type, epsilon, A, k, t, delta=delta)
            record = self._berge.record(
                KnotType.from_string(row.knot_type), row.delta, row.epsilon, row.A, row.k, row.t
            )
            base, moves = self._lshape.region_by_moves(
                record.knot_type, row.epsilon, row.A, row.k, row.t
            )
            table2 = None
            if row.k == 0 and row.t == 0:
                table2 = self._berge.table2_values(record.knot_type, row.epsilon, row.A)

            return KnotDescription(
                row=row,
                berge_braid=format_macro([(record.B, record.b), (record.m, row.delta)]),
                cp_braid=row.braid,
                base_region=base.as_tuple(),
                moves=[str(move) for move in moves],
                table2=table2,
                np_parameters=self._berge.translate_to_np(
                    record.knot_type, row.epsilon, row.A, row.k
                )
            )
        except Exception as e:
            self._audit_logger.log_error(
                error_type=type(e).__name__,
                error_message=str(e),
                context={
                    'operation': 'describe_knot',
                    'tuple': f"{knot_type}, delta={delta}, eps={epsilon}, A={A}, k={k}, t={t}"
                }
            )
            raise
