"""
Shared pytest fixtures for the naminggame test suite.
"""
import sys
from io import StringIO
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from naminggame.io_utils import InputOutput  # noqa: E402

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture
def temp_dir(tmp_path):
    """Per-test output directory."""
    return tmp_path


@pytest.fixture
def quiet_io():
    """InputOutput writing to in-memory streams."""
    return InputOutput(stdout=StringIO(), stderr=StringIO(), quiet=True)


@pytest.fixture
def small_config_path():
    """The small key=value configuration used by CLI runs."""
    return FIXTURES_DIR / "small.cfg"
