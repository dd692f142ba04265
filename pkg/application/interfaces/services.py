"""
Service Interfaces
Abstract contracts for infrastructure services
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

from domain.value_objects.divide_trace import Point, Segment
from domain.value_objects.regions import PlacedRegion


class ReportFormat(Enum):
    """Report output formats"""
    CSV = "csv"
    EXCEL = "excel"
    JSON = "json"

    @classmethod
    def from_string(cls, value: str) -> 'ReportFormat':
        for member in cls:
            if member.value == value.strip().lower():
                return member
        raise ValueError(f"Invalid report format: {value}")


class IReportFormatter(ABC):
    """
    Report Formatter Interface (Strategy Pattern)

    Abstracts report generation format.
    Each format implements this interface.
    """

    @abstractmethod
    def format(self, data: Dict[str, Any]) -> str:
        """
        Format data into report content

        Args:
            data: {"tables": {name: [row dicts]}, "metadata": {...}}

        Returns:
            Formatted report content
        """
        pass

    @abstractmethod
    def get_extension(self) -> str:
        """
        Get file extension for this format

        Returns:
            File extension (e.g., 'csv', 'xlsx')
        """
        pass


class IReportService(ABC):
    """
    Report Service Interface

    Abstracts report generation.
    """

    @abstractmethod
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
            tables: Named tables of flat row dictionaries
            output_path: Path to save report
            report_format: Desired output format
            metadata: Additional metadata to include

        Returns:
            Path to generated report file
        """
        pass

    @abstractmethod
    def generate_multi_format_reports(
        self,
        tables: Dict[str, List[Dict[str, Any]]],
        base_name: str,
        formats: List[ReportFormat],
        metadata: Optional[Dict[str, Any]] = None
    ) -> List[str]:
        """
        Generate one report per format, skipping formats that fail

        Returns:
            Paths of the reports written
        """
        pass


class IProgressObserver(ABC):
    """
    Progress Observer Interface (Observer Pattern)

    Allows decoupling progress reporting from business logic.
    """

    @abstractmethod
    def on_sweep_started(self, total_tuples: int) -> None:
        """
        Called when a sweep starts

        Args:
            total_tuples: Number of candidate tuples
        """
        pass

    @abstractmethod
    def on_row_completed(self, label: str, current: int, total: int) -> None:
        """
        Called after each candidate tuple

        Args:
            label: Tuple label
            current: Current tuple number
            total: Total tuples
        """
        pass

    @abstractmethod
    def on_sweep_completed(self, rows: int, skipped: int) -> None:
        """
        Called when the sweep completes

        Args:
            rows: Rows emitted
            skipped: Invalid tuples skipped
        """
        pass

    @abstractmethod
    def on_suite_started(self, name: str) -> None:
        """Called when a verification suite starts"""
        pass

    @abstractmethod
    def on_suite_completed(self, name: str, passed: int, failed: int, open_items: int) -> None:
        """Called when a verification suite completes"""
        pass


class IDiagramRenderer(ABC):
    """
    Diagram Renderer Interface

    Turns a traced divide into a static drawing.
    """

    @abstractmethod
    def render(
        self,
        placed: PlacedRegion,
        segments: Sequence[Segment],
        double_points: Sequence[Point]
    ) -> str:
        """
        Render a placed region and its divide

        Returns:
            Document text
        """
        pass
