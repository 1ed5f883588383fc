"""
grlw Utilities
"""

from .logger import resolve_level, setup_logger

__all__ = [
    "resolve_level",
    "setup_logger",
]
