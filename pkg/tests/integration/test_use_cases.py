"""
Integration Tests for the Use Cases
Describe, sweep and verify wired over the real services
"""

import json

import pytest

from application.dto.sweep_spec import SweepSpec
from application.dto.verification_report import VerificationBounds
from application.interfaces.services import ReportFormat
from application.use_cases.describe_knot_use_case import DescribeKnotUseCase
from application.use_cases.sweep_atlas_use_case import SweepAtlasUseCase
from application.use_cases.verify_identities_use_case import VerifyIdentitiesUseCase
from domain.exceptions.atlas_errors import ValidationError
from domain.value_objects.knot_type import KnotType
from infrastructure.persistence.jsonlines_repository import JsonLinesAtlasRepository
from infrastructure.reporting.report_generator import ReportGenerator


@pytest.fixture
def repository():
    return JsonLinesAtlasRepository()


@pytest.fixture
def reports(tmp_path):
    return ReportGenerator(output_dir=str(tmp_path / "reports"))


@pytest.fixture
def verifier(berge, lshape, tracer, braids, invariants, ttk, row_factory,
             repository, reports, audit_logger, small_bounds):
    return VerifyIdentitiesUseCase(
        berge, lshape, tracer, braids, invariants, ttk, row_factory,
        repository, reports, audit_logger, bounds=small_bounds
    )


class TestDescribeKnot:
    """Test the single-knot description"""

    def test_worked_example(self, row_factory, berge, lshape, braids, audit_logger):
        """Test K_III(1,1,2,2,1) end to end"""
        use_case = DescribeKnotUseCase(row_factory, berge, lshape, braids, audit_logger)
        description = use_case.execute(KnotType.III, 1, 2, 2, 1)

        assert description.row.coef == 219
        assert tuple(description.row.region) == (11, 13, 16, 17)
        assert description.row.all_checks_pass
        assert description.base_region == (3, 5, 3, 4)
        assert description.moves
        assert description.table2 is None
        assert description.np_parameters == berge.translate_to_np(KnotType.III, 1, 2, 2)
        assert description.berge_braid.startswith("W(13)")

    def test_table_values_at_k_zero(self, row_factory, berge, lshape, braids, audit_logger):
        """Test table values accompany k = t = 0"""
        use_case = DescribeKnotUseCase(row_factory, berge, lshape, braids, audit_logger)
        description = use_case.execute(KnotType.III, 1, 2, 0, 0)
        assert description.table2 == (18, 18)
        assert description.moves == []

    def test_invalid_tuple(self, row_factory, berge, lshape, braids, audit_logger):
        """Test Type IV rejects even A"""
        use_case = DescribeKnotUseCase(row_factory, berge, lshape, braids, audit_logger)
        with pytest.raises(ValidationError):
            use_case.execute(KnotType.IV, 1, 4, 0, 0)


class TestSweepAtlas:
    """Test streaming sweeps"""

    def test_type_three_grid(self, tmp_path, row_factory, repository, reports, audit_logger):
        """Test every Type III row of a small grid passes its checks"""
        use_case = SweepAtlasUseCase(row_factory, repository, reports, audit_logger)
        spec = SweepSpec(types=[KnotType.III], a_range=(2, 4), k_range=(0, 1), t_range=(-1, 1))
        output = tmp_path / "atlas.jsonl"

        result = use_case.execute(spec, output_path=str(output), report_formats=["csv"], report_name="atlas")

        assert len(result.rows) == 36
        assert result.skipped == []
        assert result.is_successful
        assert result.exit_code == 0
        assert len(output.read_text(encoding="utf-8").splitlines()) == 36
        assert len(result.report_paths) == 1
        assert result.report_paths[0].endswith(".csv")

    def test_rows_read_back(self, tmp_path, row_factory, repository, reports, audit_logger):
        """Test the written file reproduces the rows"""
        use_case = SweepAtlasUseCase(row_factory, repository, reports, audit_logger)
        spec = SweepSpec(types=[KnotType.V], epsilons=[1], a_range=(3, 5), k_range=(0, 0), t_range=(0, 1))
        output = tmp_path / "atlas.jsonl"
        result = use_case.execute(spec, output_path=str(output))
        assert repository.read_rows(str(output)) == result.rows
        assert json.loads(output.read_text(encoding="utf-8").splitlines()[0])["type"] == "V"

    def test_reports_skip_failing_format(self, tmp_path, monkeypatch, row_factory, repository, reports,
                                         audit_logger):
        """Test reports go through the multi-format generator and a failing format is skipped"""
        calls = []
        generate = reports.generate_multi_format_reports

        def recording(tables, base_name, formats, metadata=None):
            calls.append([fmt.value for fmt in formats])
            return generate(tables, base_name, formats, metadata)

        def broken(data):
            raise OSError("disk full")

        monkeypatch.setattr(reports, "generate_multi_format_reports", recording)
        monkeypatch.setattr(reports._formatters[ReportFormat.CSV], "format", broken)
        use_case = SweepAtlasUseCase(row_factory, repository, reports, audit_logger)
        spec = SweepSpec(types=[KnotType.V], epsilons=[1], a_range=(3, 3), k_range=(0, 0), t_range=(0, 0))

        result = use_case.execute(
            spec, output_path=str(tmp_path / "atlas.jsonl"), report_formats=["csv", "json"], report_name="atlas"
        )

        assert calls == [["csv", "json"]]
        assert len(result.report_paths) == 1
        assert result.report_paths[0].endswith(".json")
        assert result.is_successful

    def test_invalid_spec(self, row_factory, repository, reports, audit_logger):
        """Test an empty epsilon list is rejected before any work"""
        use_case = SweepAtlasUseCase(row_factory, repository, reports, audit_logger)
        with pytest.raises(ValidationError):
            use_case.execute(SweepSpec(epsilons=[]))

    def test_inverted_range_rejected(self, row_factory, repository, reports, audit_logger):
        """Test a range with min > max is an input error, not an empty sweep"""
        use_case = SweepAtlasUseCase(row_factory, repository, reports, audit_logger)
        with pytest.raises(ValidationError, match="Empty A range"):
            use_case.execute(SweepSpec(types=[KnotType.III], a_range=(5, 2)))

    def test_inadmissible_range_yields_no_rows(self, row_factory, repository, reports, audit_logger):
        """Test a range below the Type's smallest A streams nothing"""
        use_case = SweepAtlasUseCase(row_factory, repository, reports, audit_logger)
        spec = SweepSpec(types=[KnotType.IV], a_range=(2, 4), k_range=(0, 0), t_range=(0, 0))
        result = use_case.execute(spec)
        assert result.rows == []
        assert len(result.skipped) == 6
        assert result.exit_code == 0


class TestVerifyIdentities:
    """Test the verification suites"""

    def test_fast_suites(self, verifier):
        """Test the algebraic suites pass on small bounds"""
        report = verifier.execute(suites=["berge", "lshape", "lemma53", "claims"])
        assert [s.name for s in report.suites] == ["berge", "lshape", "lemma53", "claims"]
        assert report.is_successful, [s.failures for s in report.suites]
        assert report.total_passed > 0
        assert report.exit_code == 0

    def test_canonical_order(self, verifier):
        """Test suites run in canonical order whatever the request order"""
        report = verifier.execute(suites=["claims", "berge"])
        assert [s.name for s in report.suites] == ["berge", "claims"]

    def test_relations_open_item(self, verifier):
        """Test the flagged relation is reported without failing"""
        report = verifier.execute(suites=["relations"])
        relations = report.suite("relations")
        assert relations.is_successful, relations.failures
        assert relations.open_count == 1

    def test_unknown_suite(self, verifier):
        """Test an unknown suite name"""
        with pytest.raises(ValidationError, match="Unknown suite"):
            verifier.execute(suites=["berge", "knots"])

    def test_report_written(self, verifier):
        """Test the JSON report carries suites and summary"""
        report = verifier.execute(suites=["berge"], report_name="verification", report_formats=["json"])
        assert len(report.report_paths) == 1
        data = json.loads(open(report.report_paths[0], encoding="utf-8").read())
        assert data["tables"]["suites"][0]["suite"] == "berge"

    @pytest.mark.slow
    def test_all_suites(self, verifier):
        """Test every suite passes and the twisted torus rows stay open"""
        report = verifier.execute()
        assert report.is_successful, [(s.name, s.failures[:3]) for s in report.suites if s.failures]
        assert report.suite("ttk").open_count > 0
        assert report.suite("relations").open_count == 1
        assert report.get_summary()["suites"] == 9

    @pytest.mark.slow
    def test_trace_suite_default_bounds(self, berge, lshape, tracer, braids, invariants, ttk,
                                        row_factory, repository, reports, audit_logger):
        """Test the trace suite passes at the shipped bounds, including gcd >= 3 rectangles"""
        verifier = VerifyIdentitiesUseCase(
            berge, lshape, tracer, braids, invariants, ttk, row_factory,
            repository, reports, audit_logger, bounds=VerificationBounds()
        )
        report = verifier.execute(suites=["trace"])
        assert report.is_successful, report.suite("trace").failures[:3]
        assert report.suite("trace").passed > 0

    @pytest.mark.slow
    def test_all_suites_default_bounds(self, berge, lshape, tracer, braids, invariants, ttk,
                                       row_factory, repository, reports, audit_logger):
        """Test a plain verify run at the shipped bounds exits 0"""
        verifier = VerifyIdentitiesUseCase(
            berge, lshape, tracer, braids, invariants, ttk, row_factory,
            repository, reports, audit_logger, bounds=VerificationBounds()
        )
        report = verifier.execute()
        assert report.is_successful, [(s.name, s.failures[:3]) for s in report.suites if s.failures]
        assert report.exit_code == 0
