"""
Verification Report DTO
Data transfer objects for verification suites
"""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

from domain.exceptions.atlas_errors import ValidationError


SUITE_NAMES = (
    "berge",
    "lshape",
    "lemma53",
    "trace",
    "claims",
    "invar",
    "ttk",
    "relations",
    "roundtrip",
)


@dataclass
class VerificationBounds:
    """
    Grid bounds for every verification suite

    The sweep bounds drive berge, lshape, lemma53 and trace; the other
    suites have their own, smaller grids.
    """

    a_max: int = 15
    k_max: int = 3
    t_min: int = -3
    t_max: int = 3
    trace_max_area: int = 60000
    table2_a_max: int = 31
    claims_a_max: int = 10
    claims_b_max: int = 6
    lemma24_a_max: int = 8
    lemma24_c_max: int = 5
    invar_a_max: int = 4
    invar_k_max: int = 1
    ttk_a_max: int = 11
    ttk_k_max: int = 3
    ttk_profile_a_max: int = 4
    relations_a_max: int = 11
    relations_k_max: int = 3
    torus_max: int = 9
    link_max: int = 12
    roundtrip_a_max: int = 4

    def to_dict(self) -> Dict[str, int]:
        return dict(self.__dict__)


def parse_suites(text: Optional[str]) -> List[str]:
    """
    Parse "all" or a comma list of suite names

    Raises:
        ValidationError: On an unknown suite name
    """
    if not text or text.strip().lower() == "all":
        return list(SUITE_NAMES)
    names = [name.strip().lower() for name in text.split(",") if name.strip()]
    unknown = [name for name in names if name not in SUITE_NAMES]
    if unknown or not names:
        raise ValidationError(
            f"Unknown suite(s): {', '.join(unknown) or text}",
            field="suite",
            value=text,
            constraint="all or " + ",".join(SUITE_NAMES)
        )
    return [name for name in SUITE_NAMES if name in names]


@dataclass
class SuiteResult:
    """
    Result of one verification suite

    open_items are reported rows that are never asserted.
    """

    name: str
    passed: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)
    open_items: List[str] = field(default_factory=list)
    execution_time_seconds: float = 0.0

    def record(self, ok: bool, description: str) -> bool:
        """Count one check; keep the description of failures"""
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(description)
        return ok

    def record_open(self, description: str) -> None:
        self.open_items.append(description)

    @property
    def open_count(self) -> int:
        return len(self.open_items)

    @property
    def is_successful(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "open": self.open_count,
            "seconds": round(self.execution_time_seconds, 3),
        }


@dataclass
class VerificationReport:
    """
    Verification Report DTO

    Encapsulates the results of a verification run.
    """

    suites: List[SuiteResult] = field(default_factory=list)
    report_paths: List[str] = field(default_factory=list)
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None

    @property
    def total_passed(self) -> int:
        return sum(s.passed for s in self.suites)

    @property
    def total_failed(self) -> int:
        return sum(s.failed for s in self.suites)

    @property
    def is_successful(self) -> bool:
        return all(s.is_successful for s in self.suites)

    @property
    def exit_code(self) -> int:
        return 0 if self.is_successful else 1

    def suite(self, name: str) -> Optional[SuiteResult]:
        return next((s for s in self.suites if s.name == name), None)

    def tables(self) -> Dict[str, List[Dict[str, Any]]]:
        """Tabular views for report formatters"""
        failures = [
            {"suite": s.name, "failure": text}
            for s in self.suites for text in s.failures
        ]
        open_items = [
            {"suite": s.name, "item": text}
            for s in self.suites for text in s.open_items
        ]
        return {
            "suites": [s.to_dict() for s in self.suites],
            "failures": failures,
            "open_questions": open_items,
        }

    def get_summary(self) -> Dict[str, Any]:
        return {
            "suites": len(self.suites),
            "passed": self.total_passed,
            "failed": self.total_failed,
            "open": sum(s.open_count for s in self.suites),
            "started_at": self.started_at.isoformat() if self.started_at else None,
            "completed_at": self.completed_at.isoformat() if self.completed_at else None,
        }
