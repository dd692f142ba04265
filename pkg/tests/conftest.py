"""
Shared fixtures
Domain services, a row factory and an isolated CLI workspace
"""

from pathlib import Path

import pytest
import yaml

from application.dto.verification_report import VerificationBounds
from application.use_cases.row_factory import AtlasRowFactory
from config.dependency_injection import reset_container
from domain.services.berge_service import BergeService
from domain.services.braid_service import BraidService
from domain.services.handle_reduction import HandleReducer
from domain.services.invariant_service import InvariantService
from domain.services.lshape_service import LShapeService
from domain.services.trace_service import TraceService
from domain.services.ttk_service import TtkService
from infrastructure.logging.audit_logger import AuditLogger


@pytest.fixture
def berge():
    return BergeService()


@pytest.fixture
def lshape(berge):
    return LShapeService(berge)


@pytest.fixture
def tracer():
    return TraceService()


@pytest.fixture
def braids():
    return BraidService(HandleReducer())


@pytest.fixture
def invariants(braids):
    return InvariantService(braids)


@pytest.fixture
def ttk(berge, lshape, braids, invariants):
    return TtkService(berge, lshape, braids, invariants)


@pytest.fixture
def row_factory(berge, lshape, tracer, braids, invariants):
    return AtlasRowFactory(berge, lshape, tracer, braids, invariants)


@pytest.fixture
def audit_logger(tmp_path):
    return AuditLogger(log_dir=str(tmp_path / "logs"))


@pytest.fixture
def small_bounds():
    """Verification grid small enough for a unit run"""
    return VerificationBounds(
        a_max=5,
        k_max=1,
        t_min=-1,
        t_max=1,
        trace_max_area=2000,
        table2_a_max=11,
        claims_a_max=5,
        claims_b_max=3,
        lemma24_a_max=5,
        lemma24_c_max=3,
        invar_a_max=3,
        invar_k_max=1,
        ttk_a_max=5,
        ttk_k_max=1,
        ttk_profile_a_max=4,
        relations_a_max=5,
        relations_k_max=1,
        torus_max=5,
        link_max=6,
        roundtrip_a_max=3,
    )


@pytest.fixture
def workspace(tmp_path, monkeypatch, small_bounds):
    """
    Isolated working directory with a small-bounds config file

    Returns the config path; logs and reports land under tmp_path.
    """
    monkeypatch.chdir(tmp_path)
    for name in ("ATLAS_BUDGET", "ATLAS_LOG_LEVEL", "ATLAS_DEBUG",
                 "ATLAS_ALEX_MAX_INDEX", "ATLAS_ALEX_MAX_LENGTH", "ATLAS_TRACE_MAX_AREA"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("ATLAS_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setenv("ATLAS_REPORT_DIR", str(tmp_path / "reports"))

    config_path = Path(tmp_path) / "atlas.yaml"
    config_path.write_text(yaml.safe_dump({
        "sweep": {"a_min": 2, "a_max": 3, "k_min": 0, "k_max": 1, "t_min": -1, "t_max": 1},
        "verification": small_bounds.to_dict(),
        "logging": {"log_level": "WARNING"},
    }), encoding="utf-8")

    reset_container()
    yield config_path
    reset_container()
