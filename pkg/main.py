"""Command-line entry point for the phase-shift direct measurement toolkit."""

import logging
import sys

from app.config import settings
from app.cli import main as run_cli


def configure_logging() -> None:
    """Log to stderr so stdout stays reserved for command output."""
    level = logging.DEBUG if settings.debug else settings.log_level
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(level)


if __name__ == "__main__":
    configure_logging()
    sys.exit(run_cli(sys.argv[1:]))
