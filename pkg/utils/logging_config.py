# logging_config.py
import logging
import sys

from backend.config import LOG_LEVEL, LOG_FILE

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"


def setup_logging(level=None, log_file=None):
    """
    Configure the root logger once for the whole process.
    Records go to stderr so that command output on stdout stays parseable;
    a file handler is added when a log file is configured.
    """
    level = (level or LOG_LEVEL).upper()
    log_file = log_file or LOG_FILE

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
    return logging.getLogger()
