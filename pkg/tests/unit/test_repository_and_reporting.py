"""
Unit Tests for Persistence and Reporting
JSON-lines atlas files and CSV/JSON/Excel reports
"""

import json

import pytest

from application.interfaces.services import IReportFormatter, IReportService, ReportFormat
from domain.exceptions.atlas_errors import RepositoryError
from domain.value_objects.knot_type import KnotType
from infrastructure.persistence.jsonlines_repository import JsonLinesAtlasRepository
from infrastructure.reporting.report_generator import EXCEL_AVAILABLE, ReportGenerator


@pytest.fixture
def rows(row_factory):
    return [
        row_factory.build(KnotType.III, 1, 2, 0, 0),
        row_factory.build(KnotType.III, -1, 2, 0, 1),
    ]


class TestJsonLinesRepository:
    """Test atlas file storage"""

    def test_write_and_read(self, tmp_path, rows):
        """Test rows read back in file order"""
        repo = JsonLinesAtlasRepository()
        path = tmp_path / "atlas" / "rows.jsonl"
        assert repo.write_rows(rows, str(path)) == 2
        assert repo.read_rows(str(path)) == rows

    def test_fixed_key_order(self, rows):
        """Test the encoded row starts with the parameter columns"""
        line = JsonLinesAtlasRepository().encode(rows[0])
        assert line.startswith('{"type":"III","delta":-1,"epsilon":1,"A":2,"k":0,"t":0,')
        assert json.loads(line)["region"] == [3, 5, 3, 4]

    def test_deterministic_bytes(self, tmp_path, rows):
        """Test equal rows give equal files"""
        repo = JsonLinesAtlasRepository()
        first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        repo.write_rows(rows, str(first))
        repo.write_rows(rows, str(second))
        assert first.read_bytes() == second.read_bytes()

    def test_blank_lines_ignored(self, tmp_path, rows):
        """Test blank lines between rows"""
        repo = JsonLinesAtlasRepository()
        path = tmp_path / "rows.jsonl"
        path.write_text(repo.encode(rows[0]) + "\n\n", encoding="utf-8")
        assert len(repo.read_rows(str(path))) == 1

    def test_malformed_line(self, tmp_path):
        """Test the failing line number is reported"""
        path = tmp_path / "rows.jsonl"
        path.write_text('{"type": "III"}\n', encoding="utf-8")
        with pytest.raises(RepositoryError, match="line 1"):
            JsonLinesAtlasRepository().read_rows(str(path))

    def test_missing_file(self, tmp_path):
        """Test unreadable files"""
        with pytest.raises(RepositoryError, match="Cannot read"):
            JsonLinesAtlasRepository().read_rows(str(tmp_path / "absent.jsonl"))


class TestReportGenerator:
    """Test tabular reports"""

    def test_csv(self, tmp_path, rows):
        """Test CSV with a second table"""
        generator = ReportGenerator(output_dir=str(tmp_path))
        tables = {"atlas": [r.to_flat_dict() for r in rows], "summary": [{"rows": 2}]}
        path = generator.generate_report(tables, "sweep", ReportFormat.CSV)
        text = open(path, encoding="utf-8").read()
        assert path.endswith("sweep.csv")
        assert text.splitlines()[0].startswith("type,delta,epsilon,A,k,t")
        assert "# summary" in text

    def test_json(self, tmp_path, rows):
        """Test JSON tables, metadata and summary"""
        generator = ReportGenerator(output_dir=str(tmp_path))
        tables = {"atlas": [r.to_flat_dict() for r in rows]}
        path = generator.generate_report(tables, "sweep", ReportFormat.JSON)
        data = json.loads(open(path, encoding="utf-8").read())
        assert data["summary"] == {"atlas": 2}
        assert data["metadata"]["tool"] == "divide-atlas"
        assert data["tables"]["atlas"][0]["region"] == "[3,5;3,4]"

    @pytest.mark.skipif(not EXCEL_AVAILABLE, reason="pandas not installed")
    def test_excel(self, tmp_path, rows):
        """Test one sheet per table"""
        import pandas as pd

        generator = ReportGenerator(output_dir=str(tmp_path))
        tables = {"atlas_rows": [r.to_flat_dict() for r in rows]}
        path = generator.generate_report(tables, "sweep", ReportFormat.EXCEL)
        sheets = pd.read_excel(path, sheet_name=None)
        assert "Atlas Rows" in sheets
        assert len(sheets["Atlas Rows"]) == 2

    def test_multi_format(self, tmp_path, rows):
        """Test several formats at once"""
        generator = ReportGenerator(output_dir=str(tmp_path))
        tables = {"atlas": [r.to_flat_dict() for r in rows]}
        paths = generator.generate_multi_format_reports(
            tables, "sweep", [ReportFormat.CSV, ReportFormat.JSON]
        )
        assert sorted(p.rsplit(".", 1)[1] for p in paths) == ["csv", "json"]

    def test_format_from_string(self):
        """Test format parsing"""
        assert ReportFormat.from_string(" JSON ") == ReportFormat.JSON
        with pytest.raises(ValueError):
            ReportFormat.from_string("pdf")

    def test_interface_contracts(self):
        """Test the report interfaces ask only for what the use cases call"""
        assert IReportService.__abstractmethods__ == {"generate_report", "generate_multi_format_reports"}
        assert IReportFormatter.__abstractmethods__ == {"format", "get_extension"}
