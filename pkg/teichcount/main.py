"""
Main entry point for the teichcount command line
"""

import sys

from teichcount.cli import run
from teichcount.config import setup_structured_logging


def main() -> int:
    """Set up structured logging and run the command line on sys.argv"""
    try:
        setup_structured_logging()
    except ValueError:
        # unknown log level: the configuration check in run() reports it
        pass
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
