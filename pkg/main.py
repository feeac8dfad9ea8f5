# main.py
import sys
import logging

from utils.logging_config import setup_logging
from services.cli import run_command

logger = logging.getLogger(__name__)


def main(argv=None):
    setup_logging()
    try:
        return run_command(sys.argv[1:] if argv is None else argv)
    except KeyboardInterrupt:
        logger.info("Interrupted")
        return 130
    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
