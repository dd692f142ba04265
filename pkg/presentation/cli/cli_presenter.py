"""
CLI Presenter
Command-line presentation of atlas results
"""

import json
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple

from colorama import Fore, Style, init as colorama_init

from application.dto.atlas_row import CHECK_NAMES, REPORT_ONLY_CHECKS, KnotDescription
from application.dto.sweep_result import SweepResult
from application.dto.verification_report import VerificationReport
from domain.value_objects.berge_params import BergeRecord
from domain.value_objects.braid_word import BraidWord
from domain.value_objects.divide_trace import DivideTrace
from domain.value_objects.knot_profile import KnotProfile
from domain.value_objects.laurent_poly import LaurentPoly
from domain.value_objects.regions import PlacedRegion, SquareMove
from domain.value_objects.relation import Relation


class CLIPresenter:
    """
    CLI Presenter (Presentation Layer)

    Formats use-case results for the terminal. Results go to stdout,
    errors to stderr; colour is dropped when the stream is not a TTY.
    """

    def __init__(
        self,
        out: Optional[TextIO] = None,
        err: Optional[TextIO] = None,
        color: Optional[bool] = None
    ):
        self._out = out or sys.stdout
        self._err = err or sys.stderr
        self._color = self._out.isatty() if color is None else color
        if self._color:
            colorama_init()

    def _print(self, text: str = "") -> None:
        print(text, file=self._out)

    def _paint(self, text: str, *codes: str) -> str:
        if not self._color:
            return text
        return "".join(codes) + text + Style.RESET_ALL

    def _bold(self, text: object) -> str:
        return self._paint(str(text), Style.BRIGHT)

    def _status(self, ok: bool) -> str:
        return self._paint("✓", Fore.GREEN) if ok else self._paint("✗", Fore.RED)

    def display_error(self, message: str, error: Optional[Exception] = None) -> None:
        """
        Display error message

        Args:
            message: Error message to display
            error: Optional exception object
        """
        print(self._paint(f"❌ Error: {message}", Fore.RED), file=self._err)
        if error:
            print(f"   Details: {error}", file=self._err)

    def display_warning(self, message: str) -> None:
        print(self._paint(f"⚠️  Warning: {message}", Fore.YELLOW), file=self._err)

    def display_info(self, message: str) -> None:
        self._print(f"ℹ️  {message}")

    def display_success(self, message: str) -> None:
        self._print(self._paint(f"✅ {message}", Fore.GREEN))

    def display_json(self, data: Dict[str, Any]) -> None:
        self._print(json.dumps(data, indent=2, ensure_ascii=False))

    # knot

    def display_description(self, description: KnotDescription) -> None:
        row = description.row
        self._print(self._bold(row.label))
        self._print(f"  a={row.a}  l={row.l}  B={row.B}  b={row.b}  coef={row.coef}")
        if description.np_parameters:
            n, p = description.np_parameters
            self._print(f"  (n, p) = ({n}, {p})")
        self._print(f"  Berge braid   {description.berge_braid}")
        self._print("  region        [{},{};{},{}]".format(*row.region))
        self._print(f"  area          {row.area}")
        self._print(f"  double points {row.double_points}")
        self._print(f"  genus         {row.genus}")
        self._print(f"  braid         {description.cp_braid}")
        base = "[{},{};{},{}]".format(*description.base_region)
        moves = ", ".join(description.moves) if description.moves else "none"
        self._print(f"  from base     {base} by {moves}")
        if description.table2:
            coef, area = description.table2
            self._print(f"  table values  coef={coef} area={area}")
        if row.alexander is not None:
            self._print(f"  Alexander     {LaurentPoly.from_dict(row.alexander)}")
        self._print("  checks")
        for name in CHECK_NAMES:
            suffix = " (report only)" if name in REPORT_ONLY_CHECKS else ""
            self._print(f"    {self._status(row.checks.get(name, False))} {name}{suffix}")
        flags = [name for name, value in row.flags.items() if value]
        if flags:
            self._print(f"  flags         {', '.join(flags)}")

    # sweep

    def display_sweep_result(self, result: SweepResult) -> None:
        summary = result.get_summary()
        self._print(f"Rows:    {summary['rows']}")
        self._print(f"Skipped: {summary['skipped']}")
        self._print(f"Failed:  {summary['failed_rows']}")
        if result.output_path:
            self._print(f"📄 {result.output_path}")
        for path in result.report_paths:
            self._print(f"📄 {path}")
        for row in result.failed_rows[:10]:
            self._print(f"  {self._status(False)} {row.label}: {', '.join(row.failed_checks)}")
        if len(result.failed_rows) > 10:
            self._print(f"  ... and {len(result.failed_rows) - 10} more")
        if result.is_successful:
            self.display_success("All atlas checks passed")
        else:
            self.display_warning(f"{len(result.failed_rows)} rows failed their checks")

    # trace

    def display_trace(self, placed: PlacedRegion, trace: DivideTrace, svg_path: Optional[str] = None) -> None:
        self._print(f"{self._bold(placed.region)} offset={placed.offset}")
        self._print(f"  arcs          {trace.arcs}")
        self._print(f"  circles       {trace.circles}")
        self._print(f"  double points {trace.double_point_count}")
        self._print(f"  endpoints     {' '.join(str(p) for p in trace.endpoints) or '-'}")
        self._print("  intersections")
        for row in trace.intersections:
            self._print("    " + " ".join(f"{value:4d}" for value in row))
        if svg_path:
            self._print(f"📄 {svg_path}")

    # braid

    def display_braid(
        self,
        title: str,
        word: BraidWord,
        macro: Optional[str],
        conjugators: Sequence[Tuple[str, BraidWord]],
        expanded: bool
    ) -> None:
        self._print(self._bold(title))
        self._print(f"  index   {word.index}")
        self._print(f"  length  {len(word)}")
        if macro:
            self._print(f"  macro   {macro}")
        if expanded or not macro:
            self._print(f"  letters {word.expanded()}")
        for name, conjugator in conjugators:
            self._print(f"  {name:<7} {conjugator.expanded()}")

    # alex

    def display_alexander(
        self,
        word: BraidWord,
        alexander: LaurentPoly,
        determinant: int,
        genus: int,
        method: str
    ) -> None:
        self._print(self._bold(word.expanded()))
        self._print(f"  method       {method}")
        self._print(f"  Alexander    {alexander}")
        self._print(f"  coefficients {' '.join(str(c) for c in alexander.coefficients)}")
        self._print(f"  determinant  {determinant}")
        self._print(f"  genus        {genus}")

    # ttk

    def display_ttk(
        self,
        label: str,
        region: Any,
        word: BraidWord,
        profiles: Sequence[Tuple[str, KnotProfile]],
        same: bool
    ) -> None:
        self._print(self._bold(label))
        self._print(f"  region {region}")
        self._print(f"  braid  <{word.index}> length {len(word)}")
        for name, profile in profiles:
            poly = str(profile.alexander) if profile.alexander is not None else "capped"
            self._print(f"  {name:<14} genus={profile.genus} det={profile.determinant} Δ={poly}")
        self._print(f"  {self._status(same)} braid and region profiles agree")

    # relations

    def display_printed_relations(
        self,
        outcomes: Sequence[Tuple[BergeRecord, BergeRecord, SquareMove, Optional[SquareMove]]]
    ) -> None:
        self._print(self._bold("Printed relation families"))
        for source, target, expected, found in outcomes:
            ok = found == expected
            detail = str(found) if found is not None else "no single move"
            line = f"  {self._status(ok)} {source.label()} -> {target.label()}: {expected}"
            self._print(line if ok else f"{line} (found {detail})")

    def display_discovered_relations(self, relations: List[Relation]) -> None:
        self._print(self._bold(f"Discovered single-move relations ({len(relations)})"))
        for relation in relations:
            self._print(f"  {relation.describe()}  {relation.source_region} -> {relation.target_region}")

    # verify

    def display_verification(self, report: VerificationReport) -> None:
        self._print(f"{'suite':<10} {'passed':>7} {'failed':>7} {'open':>5}")
        for suite in report.suites:
            self._print(
                f"{suite.name:<10} {suite.passed:>7} {suite.failed:>7} {suite.open_count:>5} "
                f"{self._status(suite.is_successful)}"
            )
        for suite in report.suites:
            for text in suite.failures[:5]:
                self._print(f"  {self._status(False)} [{suite.name}] {text}")
            if len(suite.failures) > 5:
                self._print(f"  ... and {len(suite.failures) - 5} more in {suite.name}")
        open_items = [(s.name, text) for s in report.suites for text in s.open_items]
        if open_items:
            self._print("Open questions (not asserted):")
            for name, text in open_items[:20]:
                self._print(f"  ? [{name}] {text}")
            if len(open_items) > 20:
                self._print(f"  ... and {len(open_items) - 20} more")
        for path in report.report_paths:
            self._print(f"📄 {path}")
        if report.is_successful:
            self.display_success(f"All {report.total_passed} checks passed")
        else:
            self.display_warning(f"{report.total_failed} checks failed")
