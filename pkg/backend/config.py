# config.py
import os
import logging
from dotenv import load_dotenv

from backend.errors import ConfigurationError, ResourceLimitError

logger = logging.getLogger(__name__)

# Load environment variables from .env file
load_dotenv()


def _int_from_env(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigurationError(f"{name} must be positive, got {value}")
    return value


# Enumeration cap shared by compositions, words, matrices and products.
MAX_DEGREE = _int_from_env("NCSF_MAX_DEGREE", 8)
EXPAND_MAX_DEGREE = _int_from_env("NCSF_EXPAND_MAX_DEGREE", 8)
VERIFY_MAX_DEGREE = _int_from_env("NCSF_VERIFY_MAX_DEGREE", 6)
WARN_DEGREE = _int_from_env("NCSF_WARN_DEGREE", 9)
WORKERS = _int_from_env("NCSF_WORKERS", 1)

LOG_LEVEL = os.getenv("NCSF_LOG_LEVEL", "INFO").upper()
LOG_FILE = os.getenv("NCSF_LOG_FILE") or None


def resolve_cap(cap=None):
    """
    Return the enumeration cap to use: the explicit value when given,
    otherwise the configured MAX_DEGREE (read at call time so it can be patched).
    """
    if cap is not None:
        return cap
    return MAX_DEGREE


def ensure_within_cap(degree, cap=None, what="enumeration"):
    """
    Refuse degrees above the cap; warn when the degree reaches WARN_DEGREE.
    Returns the cap that was applied.
    """
    cap = resolve_cap(cap)
    if degree > cap:
        raise ResourceLimitError(degree, cap, what)
    if degree >= WARN_DEGREE:
        logger.warning(
            f"{what} of degree {degree} requested; this may take a long time"
        )
    return cap
