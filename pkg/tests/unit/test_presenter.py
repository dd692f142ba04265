"""
Unit Tests for the CLI Presenter
"""

import io

import pytest

from application.dto.atlas_row import KnotDescription
from domain.value_objects.knot_type import KnotType
from domain.value_objects.laurent_poly import LaurentPoly
from domain.value_objects.regions import LRegion
from presentation.cli.cli_presenter import CLIPresenter


@pytest.fixture
def streams():
    return io.StringIO(), io.StringIO()


@pytest.fixture
def presenter(streams):
    out, err = streams
    return CLIPresenter(out=out, err=err, color=False)


class TestCLIPresenter:
    """Test terminal output"""

    def test_description(self, presenter, streams, row_factory):
        """Test the knot summary lists values and checks"""
        row = row_factory.build(KnotType.III, 1, 2, 2, 1)
        presenter.display_description(KnotDescription(
            row=row,
            berge_braid="W(13)^17 W(3)",
            cp_braid=row.braid,
            base_region=(3, 5, 3, 4),
            moves=["+2 long_arm_b2", "+1 bottom_a2"],
            table2=(18, 18),
            np_parameters=(1, 3),
        ))
        text = streams[0].getvalue()
        assert "K_III(-1, 1, 2, 2, 1)" in text
        assert "coef=219" in text
        assert "[11,13;16,17]" in text
        assert "from base     [3,5;3,4] by +2 long_arm_b2, +1 bottom_a2" in text
        assert "✓ immersed_arc" in text
        assert "gt_conjecture_window (report only)" in text
        assert "\x1b[" not in text

    def test_trace(self, presenter, streams, tracer):
        """Test the trace summary"""
        placed = tracer.place(LRegion(3, 5, 3, 4))
        presenter.display_trace(placed, tracer.trace(placed), svg_path="out.svg")
        text = streams[0].getvalue()
        assert "double points 5" in text
        assert "📄 out.svg" in text

    def test_alexander(self, presenter, streams, braids):
        """Test the Alexander summary"""
        presenter.display_alexander(braids.W(3, 3) ** 2, LaurentPoly(0, (1, -1, 1)), 3, 1, "burau")
        text = streams[0].getvalue()
        assert "t^2 - t + 1" in text
        assert "determinant  3" in text

    def test_errors_go_to_stderr(self, presenter, streams):
        """Test error and warning routing"""
        presenter.display_error("bad tuple", ValueError("A too small"))
        presenter.display_warning("capped")
        out, err = streams
        assert out.getvalue() == ""
        assert "Error: bad tuple" in err.getvalue()
        assert "Details: A too small" in err.getvalue()
        assert "Warning: capped" in err.getvalue()

    def test_json(self, presenter, streams):
        """Test JSON output is indented"""
        presenter.display_json({"coef": 219})
        assert streams[0].getvalue() == '{\n  "coef": 219\n}\n'

    def test_color(self, streams):
        """Test colour codes when enabled"""
        out, err = streams
        CLIPresenter(out=out, err=err, color=True).display_success("done")
        assert "\x1b[" in out.getvalue()
