"""
Sweep Result DTO
Outcome of a sweep run
"""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

from application.dto.atlas_row import AtlasRow


@dataclass
class SkippedTuple:
    """A candidate tuple rejected by validation"""
    label: str
    reason: str

    def to_dict(self) -> Dict[str, str]:
        return {"tuple": self.label, "reason": self.reason}


@dataclass
class SweepResult:
    """
    Sweep Result DTO

    Rows are kept in output order.
    """

    rows: List[AtlasRow] = field(default_factory=list)
    skipped: List[SkippedTuple] = field(default_factory=list)
    output_path: Optional[str] = None
    report_paths: List[str] = field(default_factory=list)
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None
    execution_time_seconds: float = 0.0

    @property
    def failed_rows(self) -> List[AtlasRow]:
        return [row for row in self.rows if not row.all_checks_pass]

    @property
    def is_successful(self) -> bool:
        return not self.failed_rows

    @property
    def exit_code(self) -> int:
        return 0 if self.is_successful else 1

    def tables(self) -> Dict[str, List[Dict[str, Any]]]:
        """Tabular views for report formatters"""
        return {
            "rows": [row.to_flat_dict() for row in self.rows],
            "skipped": [s.to_dict() for s in self.skipped],
        }

    def get_summary(self) -> Dict[str, Any]:
        return {
            "rows": len(self.rows),
            "skipped": len(self.skipped),
            "failed_rows": len(self.failed_rows),
            "output_path": self.output_path,
            "execution_time_seconds": round(self.execution_time_seconds, 3),
        }
