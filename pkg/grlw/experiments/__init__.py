"""
grlw Experiments
"""

from .config import RunConfig, parse_config
from .runner import ExperimentResult, run_experiment
from .output import emit_snapshot

__all__ = [
    "RunConfig",
    "parse_config",
    "ExperimentResult",
    "run_experiment",
    "emit_snapshot",
]
