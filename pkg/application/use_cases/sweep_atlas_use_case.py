"""
Sweep Atlas Use Case
Streams atlas rows over a parameter grid
"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Iterator, List, Optional

from application.dto.atlas_row import AtlasRow
from application.dto.sweep_result import SkippedTuple, SweepResult
from application.dto.sweep_spec import SweepSpec
from application.interfaces.repositories import IAtlasRepository
from application.interfaces.services import IProgressObserver, IReportService, ReportFormat
from application.use_cases.row_factory import AtlasRowFactory
from domain.exceptions.atlas_errors import ValidationError
from infrastructure.logging.audit_logger import AuditLogger


logger = logging.getLogger(__name__)


class SweepAtlasUseCase:
    """
    Sweep Atlas Use Case

    One row per valid tuple, in lexicographic (type, ε, A, k, t) order.
    Invalid tuples are skipped with a log line and an audit event.
    """

    def __init__(
        self,
        row_factory: AtlasRowFactory,
        repository: IAtlasRepository,
        report_service: IReportService,
        audit_logger: AuditLogger
    ):
        """
        Initialize sweep use case

        Args:
            row_factory: Builds one row per tuple
            repository: JSON-lines row store
            report_service: Tabular report generation
            audit_logger: Audit logger
        """
        self._row_factory = row_factory
        self._repository = repository
        self._report_service = report_service
        self._audit_logger = audit_logger
        self._progress_observer: Optional[IProgressObserver] = None

    def set_progress_observer(self, observer: IProgressObserver) -> None:
        """Set progress observer"""
        self._progress_observer = observer

    def stream(self, spec: SweepSpec, skipped: Optional[List[SkippedTuple]] = None) -> Iterator[AtlasRow]:
        """
        Yield rows lazily

        Args:
            spec: Validated sweep spec
            skipped: Collects rejected tuples when given
        """
        factory = self._row_factory.with_caps(
            spec.max_alexander_index,
            spec.max_alexander_length,
            spec.trace_max_area
        )
        candidates = list(spec.tuples())
        total = len(candidates)
        for current, (knot_type, epsilon, A, k, t) in enumerate(candidates, 1):
            label = f"K_{knot_type}(eps={epsilon}, A={A}, k={k}, t={t})"
            try:
                yield factory.build(knot_type, epsilon, A, k, t)
            except ValidationError as e:
                logger.info("Skipping %s: %s", label, e.message)
                self._audit_logger.log_row_skipped(label, e.message)
                if skipped is not None:
                    skipped.append(SkippedTuple(label, e.message))
            if self._progress_observer:
                self._progress_observer.on_row_completed(label, current, total)

    def execute(
        self,
        spec: SweepSpec,
        output_path: Optional[str] = None,
        report_formats: Optional[List[str]] = None,
        report_name: Optional[str] = None
    ) -> SweepResult:
        """
        Run a sweep

        Args:
            spec: Sweep spec
            output_path: JSON-lines file to write, if any
            report_formats: Tabular report formats (csv, json, excel)
            report_name: Base file name for reports

        Returns:
            SweepResult with rows and skipped tuples

        Raises:
            ValidationError: If the spec is invalid
            RepositoryError: If the output cannot be written
        """
        spec.validate()
        started_at = datetime.now()
        result = SweepResult(started_at=started_at)
        total = sum(1 for _ in spec.tuples())

        self._audit_logger.log_sweep_started(spec.to_dict(), total)
        if self._progress_observer:
            self._progress_observer.on_sweep_started(total)

        try:
            result.rows = list(self.stream(spec, result.skipped))

            if output_path:
                self._repository.write_rows(result.rows, output_path)
                result.output_path = output_path

            if report_formats:
                result.report_paths = self._generate_reports(result, report_formats, report_name, spec)

            result.completed_at = datetime.now()
            result.execution_time_seconds = (result.completed_at - started_at).total_seconds()

            if self._progress_observer:
                self._progress_observer.on_sweep_completed(len(result.rows), len(result.skipped))
            self._audit_logger.log_sweep_completed(
                rows=len(result.rows),
                skipped=len(result.skipped),
                failed_rows=len(result.failed_rows),
                duration_seconds=result.execution_time_seconds,
                output_path=result.output_path
            )
            return result

        except Exception as e:
            self._audit_logger.log_error(
                error_type=type(e).__name__,
                error_message=str(e),
                context={'operation': 'sweep', 'spec': spec.to_dict()}
            )
            raise

    def _generate_reports(
        self,
        result: SweepResult,
        formats: List[str],
        report_name: Optional[str],
        spec: SweepSpec
    ) -> List[str]:
        base_name = report_name or f"atlas_{datetime.now().strftime('%Y%m%d_%H%M%S')}"
        metadata = {
            'report_type': 'Atlas Sweep',
            'generated_at': datetime.now().isoformat(),
            'spec': spec.to_dict(),
            **result.get_summary()
        }

        report_formats = [ReportFormat.from_string(fmt) for fmt in formats]
        paths = self._report_service.generate_multi_format_reports(
            result.tables(), base_name, report_formats, metadata
        )
        for path in paths:
            self._audit_logger.log_report_generation(
                Path(path).suffix.lstrip('.'), path, len(result.rows), True
            )
        if len(paths) < len(report_formats):
            self._audit_logger.log_report_generation(
                ",".join(f.value for f in report_formats), base_name, len(result.rows), False
            )
        return paths
