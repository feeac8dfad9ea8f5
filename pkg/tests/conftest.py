import io
import os
import sys

import pytest
from unittest.mock import patch

# Add the project directory to the Python path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Import project modules after setting up the path
from services.cli import run_command

# Generic fixtures that can be used across different test modules

@pytest.fixture
def golden_dir():
    """Directory holding the published matrices as plain text"""
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")

@pytest.fixture
def order4():
    """Compositions of 4 in table order"""
    return [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 3), (1, 2, 1), (1, 1, 2), (1, 1, 1, 1)]

@pytest.fixture
def small_cap():
    """Lower the configured enumeration cap to 5 for the duration of a test"""
    with patch("backend.config.MAX_DEGREE", 5):
        yield 5

@pytest.fixture
def cli():
    """Run the command line in-process; returns (exit code, stdout, stderr)"""
    def run(*argv):
        out = io.StringIO()
        err = io.StringIO()
        code = run_command(list(argv), out=out, err=err)
        return code, out.getvalue(), err.getvalue()
    return run
