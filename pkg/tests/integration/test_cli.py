"""
Integration Tests for the Command Line
Each command runs through main() against a small-bounds workspace
"""

import io
import json

import pytest

from presentation.cli.cli_presenter import CLIPresenter
from presentation.main import EXIT_FAILED, EXIT_INVALID, EXIT_OK, build_parser, main


@pytest.fixture
def streams():
    return io.StringIO(), io.StringIO()


@pytest.fixture
def run(workspace, streams):
    """Run the CLI with the workspace config; returns the exit code"""
    out, err = streams

    def _run(*argv):
        presenter = CLIPresenter(out=out, err=err, color=False)
        return main(["--config", str(workspace), "--no-progress", *argv], presenter=presenter)
    return _run


class TestKnotCommand:
    """Test knot"""

    def test_json_canonical_sign(self, run, streams):
        """Test the canonical sign gives a positive coefficient"""
        assert run("knot", "--type", "III", "--eps", "1", "-A", "2", "-k", "2", "-t", "1",
                   "--format", "json") == EXIT_OK
        data = json.loads(streams[0].getvalue())
        assert data["row"]["coef"] == 219
        assert data["row"]["region"] == [11, 13, 16, 17]

    def test_json_mirror_sign(self, run, streams):
        """Test the presented sign flips the coefficient"""
        assert run("knot", "--type", "III", "--eps", "1", "-A", "2", "-k", "2", "-t", "1",
                   "--delta", "1", "--format", "json") == EXIT_OK
        data = json.loads(streams[0].getvalue())
        assert data["row"]["coef"] == -219
        assert data["row"]["flags"]["mirror"]

    def test_table(self, run, streams):
        assert run("knot", "--type", "III", "--eps", "1", "-A", "2") == EXIT_OK
        assert "coef=18" in streams[0].getvalue()

    def test_invalid_A(self, run, streams):
        """Test Type IV with even A is invalid input"""
        assert run("knot", "--type", "IV", "--eps", "1", "-A", "4") == EXIT_INVALID
        assert "Invalid input" in streams[1].getvalue()

    def test_invalid_epsilon(self, run):
        assert run("knot", "--type", "III", "--eps", "0", "-A", "2") == EXIT_INVALID


class TestTraceAndBraidCommands:
    """Test trace and braid"""

    def test_trace_with_svg(self, run, streams, workspace):
        """Test the SVG drawing is written next to the summary"""
        target = workspace.parent / "drawings" / "region.svg"
        assert run("trace", "--region", "3,5,3,4", "--svg", str(target)) == EXIT_OK
        assert target.read_text(encoding="utf-8").count("<circle ") == 5
        assert "double points 5" in streams[0].getvalue()

    def test_trace_rect(self, run, streams):
        assert run("trace", "--rect", "2,3") == EXIT_OK
        assert "double points 1" in streams[0].getvalue()

    def test_bad_region(self, run):
        assert run("trace", "--region", "3,5,3") == EXIT_INVALID

    def test_braid(self, run, streams):
        """Test the macro form of the region braid"""
        assert run("braid", "--region", "3,5,3,4") == EXIT_OK
        assert "W(5)^3 W(3)" in streams[0].getvalue()


class TestAlexCommand:
    """Test alex"""

    def test_lehmer_knot(self, run, streams):
        """Test the Lehmer braid closure"""
        assert run("alex", "--braid", "W(5)^3 W(3)") == EXIT_OK
        assert "determinant  1" in streams[0].getvalue()

    def test_seifert_method(self, run):
        assert run("alex", "--braid", "W(5)^3 W(3)", "--seifert") == EXIT_OK

    def test_link_fails(self, run, streams):
        """Test a two-component closure is an operation failure"""
        assert run("alex", "--braid", "s1 s1") == EXIT_FAILED
        assert "Operation failed" in streams[1].getvalue()

    def test_unparsable_word(self, run):
        assert run("alex", "--braid", "W(5)^x") == EXIT_INVALID


class TestTtkAndRelationsCommands:
    """Test ttk and relations"""

    def test_ttk_profiles_match(self, run, streams):
        """Test braid and region profiles agree"""
        assert run("ttk", "-p", "4", "-q", "3", "-r", "5", "-s", "1") == EXIT_OK
        assert "[6,8;4,5]" in streams[0].getvalue()

    def test_ttk_r_equals_p(self, run):
        """Test twisting every strand is rejected"""
        assert run("ttk", "-p", "4", "-q", "3", "-r", "4", "-s", "1") == EXIT_INVALID

    def test_relations(self, run):
        assert run("relations", "--max-A", "5", "--max-k", "1") == EXIT_OK

    def test_relations_discover(self, run, streams):
        assert run("relations", "--max-A", "3", "--max-k", "1", "--discover") == EXIT_OK
        assert streams[0].getvalue()


class TestSweepAndVerifyCommands:
    """Test sweep and verify"""

    def test_sweep_uses_config_ranges(self, run, workspace):
        """Test the configured grid A=2..3, k=0..1, t=-1..1 for Type III"""
        output = workspace.parent / "atlas.jsonl"
        assert run("sweep", "--types", "III", "--out", str(output)) == EXIT_OK
        assert len(output.read_text(encoding="utf-8").splitlines()) == 24

    def test_sweep_grid_and_reports(self, run, workspace):
        """Test the grid option and a CSV report"""
        output = workspace.parent / "atlas.jsonl"
        assert run("sweep", "--types", "V", "--eps", "1", "--grid", "A=3..5,k=0..0,t=0..0",
                   "--out", str(output), "--formats", "csv", "--report-name", "v_rows") == EXIT_OK
        assert len(output.read_text(encoding="utf-8").splitlines()) == 2
        assert list((workspace.parent / "reports").glob("v_rows*.csv"))

    def test_sweep_rows_use_canonical_sign(self, run, workspace):
        """Test a sweep row carries coef 219 where knot --delta 1 gives -219"""
        output = workspace.parent / "atlas.jsonl"
        assert run("sweep", "--types", "III", "--eps", "1", "--grid", "A=2..2,k=2..2,t=1..1",
                   "--out", str(output)) == EXIT_OK
        row = json.loads(output.read_text(encoding="utf-8").splitlines()[0])
        assert (row["delta"], row["coef"]) == (-1, 219)

    def test_sweep_help_names_sign_convention(self, capsys):
        """Test sweep --help explains the canonical sign"""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["sweep", "--help"])
        assert "knot --delta" in capsys.readouterr().out

    def test_sweep_bad_grid(self, run):
        assert run("sweep", "--grid", "A=2..x") == EXIT_INVALID

    def test_verify(self, run, streams):
        """Test selected suites pass"""
        assert run("verify", "--suite", "berge,claims") == EXIT_OK
        text = streams[0].getvalue()
        assert "berge" in text and "claims" in text

    def test_verify_unknown_suite(self, run, streams):
        assert run("verify", "--suite", "berge,knots") == EXIT_INVALID
        assert "Unknown suite" in streams[1].getvalue()


class TestArgumentErrors:
    """Test argparse failures"""

    def test_missing_required(self, workspace):
        """Test argparse exits with status 2"""
        with pytest.raises(SystemExit) as info:
            main(["--config", str(workspace), "knot", "--type", "III"])
        assert info.value.code == 2

    def test_bad_config(self, tmp_path, streams):
        """Test a missing config file is a configuration error"""
        out, err = streams
        code = main(["--config", str(tmp_path / "absent.yaml"), "trace", "--rect", "1,1"],
                    presenter=CLIPresenter(out=out, err=err, color=False))
        assert code == EXIT_INVALID
        assert "Configuration error" in err.getvalue()
