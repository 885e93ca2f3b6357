"""Centralized CLI error handling.

Goal: keep command handlers clean and map every failure to a consistent exit
code and a one-line message on stderr.
"""

from __future__ import annotations

import logging
from typing import TextIO

from ..core.exceptions import FanolabError, VerificationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFICATION = 2
# sysexits EX_USAGE; kept apart from the verification code.
EXIT_USAGE = 64


class UsageError(Exception):
    """Bad command line, raised by the parser instead of exiting."""

    def __init__(self, usage: str, message: str) -> None:
        super().__init__(message)
        self.usage = usage


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, VerificationError):
        return EXIT_VERIFICATION
    return EXIT_INVALID


def report_error(exc: BaseException, stderr: TextIO) -> int:
    """Print ``exc`` to stderr and return its exit code."""
    if isinstance(exc, FanolabError | ValueError | OSError):
        print(f"error: {exc}", file=stderr)
    else:
        # Unexpected: keep the traceback in the log for diagnosis.
        logger.exception("Unhandled error")
        print(f"error: internal error ({type(exc).__name__})", file=stderr)
    return exit_code_for(exc)


def configure_logging(level: str = "WARNING") -> None:
    """Basic logging configuration (safe defaults).

    Respects user-defined logging config if already configured.
    """
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
