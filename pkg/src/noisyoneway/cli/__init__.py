from .config import ExperimentConfig, PROTOCOL_NAMES, MEASURES, AVAILABLE
from .presets import PRESETS, preset, preset_names
from .runner import SweepResult, run, protocol_for, versions
from .verify import CheckResult, CHECKS, run_checks
from .main import main



__all__ = [
    "ExperimentConfig",
    "PROTOCOL_NAMES",
    "MEASURES",
    "AVAILABLE",
    "PRESETS",
    "preset",
    "preset_names",
    "SweepResult",
    "run",
    "protocol_for",
    "versions",
    "CheckResult",
    "CHECKS",
    "run_checks",
    "main"
]
