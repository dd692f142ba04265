"""
Report Generator with Strategy Pattern
Generates reports in multiple formats
"""

import base64
import logging
from typing import List, Dict, Any, Optional
from pathlib import Path
from datetime import datetime

from application.interfaces.services import IReportService, IReportFormatter, ReportFormat
from infrastructure.reporting.formatters.csv_formatter import CSVReportFormatter
from infrastructure.reporting.formatters.json_formatter import JSONReportFormatter

try:
    from infrastructure.reporting.formatters.excel_formatter import ExcelReportFormatter
    EXCEL_AVAILABLE = True
except ImportError:
    EXCEL_AVAILABLE = False


logger = logging.getLogger(__name__)


class ReportGenerator(IReportService):
    """
    Report Generator (Strategy Pattern)

    Writes named tables of flat rows through a formatter per format.
    Supports CSV, JSON, and Excel (if pandas available).
    """

    def __init__(
        self,
        output_dir: str = "reports",
        json_indent: int = 2,
        csv_delimiter: str = ",",
        excel_engine: str = "openpyxl",
        include_metadata: bool = True,
        app_name: str = "divide-atlas",
        version: str = "1.0.0"
    ):
        """
        Initialize report generator

        Args:
            output_dir: Directory to save reports
            json_indent: Indentation of JSON reports
            csv_delimiter: Delimiter of CSV reports
            excel_engine: pandas Excel writer engine
            include_metadata: Whether Excel reports get a metadata sheet
            app_name: Tool name recorded in default metadata
            version: Tool version recorded in default metadata
        """
        self._output_dir = Path(output_dir)
        self._app_name = app_name
        self._version = version

        self._formatters: Dict[ReportFormat, IReportFormatter] = {
            ReportFormat.CSV: CSVReportFormatter(delimiter=csv_delimiter),
            ReportFormat.JSON: JSONReportFormatter(indent=json_indent)
        }

        if EXCEL_AVAILABLE:
            self._formatters[ReportFormat.EXCEL] = ExcelReportFormatter(
                engine=excel_engine,
                include_metadata=include_metadata
            )

    def generate_report(
        self,
        tables: Dict[str, List[Dict[str, Any]]],
        output_path: str,
        report_format: ReportFormat,
        metadata: Optional[Dict[str, Any]] = None
    ) -> str:
        """
        Generate a report

        Args:
            tables: Named tables of flat rows
            output_path: Path to save report (relative to output_dir)
            report_format: Desired output format
            metadata: Additional metadata to include

        Returns:
            Path to generated report file

        Raises:
            ValueError: If the format is not available
        """
        formatter = self._formatters.get(report_format)
        if formatter is None:
            raise ValueError(f"Unsupported report format: {report_format}")

        report_data = {
            'tables': tables,
            'metadata': metadata or self._generate_default_metadata(tables)
        }
        formatted_content = formatter.format(report_data)

        if not output_path.endswith(f".{formatter.get_extension()}"):
            output_path = f"{output_path}.{formatter.get_extension()}"

        full_path = self._output_dir / output_path
        full_path.parent.mkdir(parents=True, exist_ok=True)

        if formatter.get_extension() == 'xlsx':
            # Excel returns base64-encoded content
            full_path.write_bytes(base64.b64decode(formatted_content))
        else:
            full_path.write_text(formatted_content, encoding='utf-8')

        logger.info("Wrote %s report %s", report_format.value, full_path)
        return str(full_path)

    def generate_multi_format_reports(
        self,
        tables: Dict[str, List[Dict[str, Any]]],
        base_name: str,
        formats: List[ReportFormat],
        metadata: Optional[Dict[str, Any]] = None
    ) -> List[str]:
        """
        Generate reports in multiple formats

        Returns:
            List of paths to generated reports
        """
        report_paths = []

        for fmt in formats:
            if fmt in self._formatters:
                try:
                    report_paths.append(self.generate_report(tables, base_name, fmt, metadata))
                except Exception as e:
                    # Log error but continue with other formats
                    logger.warning("Failed to generate %s report: %s", fmt.value, e)

        return report_paths

    def _generate_default_metadata(self, tables: Dict[str, List[Dict[str, Any]]]) -> Dict[str, Any]:
        return {
            'generated_at': datetime.now().isoformat(),
            'tables': {name: len(rows) for name, rows in tables.items()},
            'tool': self._app_name,
            'version': self._version
        }
