"""
Environment Module

Reads process-level settings. An optional ``.env`` file in the working
directory is loaded first so ``GRLW_OUT_DIR`` can be pinned per checkout.
"""

import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

OUT_DIR_VARIABLE = "GRLW_OUT_DIR"
DEFAULT_OUT_DIR = "results"


def load_environment(dotenv_path: Optional[str] = None) -> bool:
    """Load ``.env`` values without overriding variables already set"""
    loaded = load_dotenv(dotenv_path=dotenv_path, override=False)
    if loaded:
        logger.debug(f"Loaded environment from {dotenv_path or '.env'}")
    return loaded


def default_output_dir() -> Path:
    """Directory experiments write into when no ``--out`` is given"""
    value = os.environ.get(OUT_DIR_VARIABLE, "").strip()
    return Path(value) if value else Path(DEFAULT_OUT_DIR)
