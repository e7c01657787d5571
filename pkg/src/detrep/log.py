"""Logging configuration for detrep."""

from __future__ import annotations

import logging
import sys


def configure_cli_logging(verbose: bool = False) -> None:
    """Route package log records to stderr.

    Args:
        verbose: Emit debug records instead of warnings only.
    """
    root = logging.getLogger("detrep")
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
