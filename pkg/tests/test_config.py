import logging
import os

import pytest
from unittest.mock import patch

from backend import config
from backend.errors import ConfigurationError, ResourceLimitError

def test_int_from_env_default():
    """Test that unset and blank variables fall back to the default"""
    with patch.dict(os.environ, {"NCSF_TEST_VALUE": "  "}):
        assert config._int_from_env("NCSF_TEST_VALUE", 7) == 7
    assert config._int_from_env("NCSF_SURELY_UNSET_VALUE", 3) == 3

def test_int_from_env_value():
    """Test reading a positive integer"""
    with patch.dict(os.environ, {"NCSF_TEST_VALUE": "12"}):
        assert config._int_from_env("NCSF_TEST_VALUE", 7) == 12

@pytest.mark.parametrize("raw", ["eight", "0", "-3", "2.5"])
def test_int_from_env_invalid(raw):
    """Test that malformed or nonpositive values are refused"""
    with patch.dict(os.environ, {"NCSF_TEST_VALUE": raw}):
        with pytest.raises(ConfigurationError):
            config._int_from_env("NCSF_TEST_VALUE", 7)

def test_resolve_cap_reads_patched_value():
    """Test that the configured cap is read at call time"""
    with patch("backend.config.MAX_DEGREE", 4):
        assert config.resolve_cap() == 4
        assert config.resolve_cap(6) == 6

def test_ensure_within_cap_raises():
    """Test the error raised above the cap"""
    with pytest.raises(ResourceLimitError) as exc_info:
        config.ensure_within_cap(7, 5, "matrix")
    assert exc_info.value.degree == 7
    assert exc_info.value.cap == 5
    assert "matrix of degree 7" in str(exc_info.value)

def test_ensure_within_cap_warns(caplog):
    """Test the warning logged for large degrees"""
    with patch("backend.config.WARN_DEGREE", 3):
        with caplog.at_level(logging.WARNING, logger="backend.config"):
            assert config.ensure_within_cap(4, 5, "matrix") == 5
    assert "matrix of degree 4 requested" in caplog.text
