"""
Audit Logger
Structured audit trail for sweeps and verification runs
"""

import logging
import json
from pathlib import Path
from datetime import datetime
from typing import Dict, Any, Optional
from logging.handlers import RotatingFileHandler


class AuditLogger:
    """
    Audit Logger

    Writes one JSON object per event. Uses a rotating file handler to
    manage log size; with enabled=False events are dropped.
    """

    def __init__(
        self,
        log_dir: str = "logs",
        audit_file: str = "audit.log",
        max_bytes: int = 10 * 1024 * 1024,  # 10MB
        backup_count: int = 5,
        enabled: bool = True
    ):
        """
        Initialize audit logger

        Args:
            log_dir: Directory for log files
            audit_file: Audit log filename
            max_bytes: Maximum size per log file
            backup_count: Number of backup files to keep
            enabled: Whether events are written at all
        """
        self._enabled = enabled
        self._logger = logging.getLogger('atlas.audit')
        self._logger.setLevel(logging.INFO)
        self._logger.propagate = False

        # Remove existing handlers
        for handler in list(self._logger.handlers):
            handler.close()
            self._logger.removeHandler(handler)

        if not enabled:
            self._logger.addHandler(logging.NullHandler())
            return

        self._log_dir = Path(log_dir)
        self._log_dir.mkdir(parents=True, exist_ok=True)

        file_handler = RotatingFileHandler(
            self._log_dir / audit_file,
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding='utf-8'
        )

        # JSON formatter for structured logs
        file_handler.setFormatter(logging.Formatter('%(message)s'))
        self._logger.addHandler(file_handler)

    def log_sweep_started(self, spec: Dict[str, Any], total_tuples: int) -> None:
        """
        Log sweep start

        Args:
            spec: Serialized sweep spec
            total_tuples: Number of candidate tuples
        """
        self._log_event('sweep_started', {
            'spec': spec,
            'total_tuples': total_tuples
        })

    def log_sweep_completed(
        self,
        rows: int,
        skipped: int,
        failed_rows: int,
        duration_seconds: float,
        output_path: Optional[str] = None
    ) -> None:
        """
        Log sweep completion

        Args:
            rows: Rows emitted
            skipped: Invalid tuples skipped
            failed_rows: Rows with a failed asserted check
            duration_seconds: Sweep duration
            output_path: JSON-lines file, if written
        """
        self._log_event('sweep_completed', {
            'rows': rows,
            'skipped': skipped,
            'failed_rows': failed_rows,
            'duration_seconds': duration_seconds,
            'output_path': output_path
        })

    def log_row_skipped(self, label: str, reason: str) -> None:
        self._log_event('row_skipped', {
            'tuple': label,
            'reason': reason
        })

    def log_verification_started(self, suites: list) -> None:
        self._log_event('verification_started', {
            'suites': list(suites)
        })

    def log_suite_completed(
        self,
        suite: str,
        passed: int,
        failed: int,
        open_items: int,
        duration_seconds: float
    ) -> None:
        """
        Log completion of one verification suite

        Args:
            suite: Suite name
            passed: Passed checks
            failed: Failed checks
            open_items: Reported, unasserted rows
            duration_seconds: Suite duration
        """
        self._log_event('suite_completed', {
            'suite': suite,
            'passed': passed,
            'failed': failed,
            'open': open_items,
            'duration_seconds': duration_seconds
        })

    def log_verification_completed(self, passed: int, failed: int, exit_code: int) -> None:
        self._log_event('verification_completed', {
            'passed': passed,
            'failed': failed,
            'exit_code': exit_code
        })

    def log_report_generation(
        self,
        report_format: str,
        file_path: str,
        rows_included: int,
        success: bool
    ) -> None:
        """
        Log report generation

        Args:
            report_format: Report format (csv, excel, json)
            file_path: Path to generated report
            rows_included: Number of rows in report
            success: Whether generation succeeded
        """
        self._log_event('report_generation', {
            'report_format': report_format,
            'file_path': file_path,
            'rows_included': rows_included,
            'success': success
        })

    def log_error(
        self,
        error_type: str,
        error_message: str,
        context: Optional[Dict[str, Any]] = None
    ) -> None:
        """
        Log error

        Args:
            error_type: Type of error
            error_message: Error message
            context: Additional context information
        """
        self._log_event('error', {
            'error_type': error_type,
            'error_message': error_message,
            'context': context or {}
        })

    def _log_event(self, event_type: str, data: Dict[str, Any]) -> None:
        """
        Log an event with structured data

        Args:
            event_type: Type of event
            data: Event data
        """
        if not self._enabled:
            return
        log_entry = {
            'timestamp': datetime.now().isoformat(),
            'event_type': event_type,
            **data
        }

        self._logger.info(json.dumps(log_entry, default=str))
