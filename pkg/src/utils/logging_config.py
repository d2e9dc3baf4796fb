"""
Logging setup for command-line runs
"""
import logging
import os
import sys
from typing import Optional

DEFAULT_LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    """
    Route library logs to stderr so report output stays byte-stable

    Args:
        level: Level name; falls back to ASYMPTREE_LOG_LEVEL, then WARNING
    """
    level_name = (level or os.getenv("ASYMPTREE_LOG_LEVEL", DEFAULT_LOG_LEVEL)).upper()
    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
