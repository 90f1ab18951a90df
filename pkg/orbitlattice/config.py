import os
import logging
from enum import Enum

_logger = logging.getLogger(__name__)

DEFAULT_THREADS = 1
DEFAULT_N_CAP = 8
# Exhaustive suites never run above this, --unsafe-no-cap or not.
HARD_N_CAP = 10


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    DOT = "dot"
    CSV = "csv"


class LogLevel(Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


def _int_setting(name: str, default: int, minimum: int = 1) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        _logger.warning("Unknown %s '%s', falling back to %d", name, raw, default)
        return default
    if value < minimum:
        _logger.warning("%s must be >= %d, got %d; falling back to %d", name, minimum, value, default)
        return default
    return value


def get_threads() -> int:
    """Worker count for data-parallel loops (ORBITLATTICE_THREADS)."""
    return _int_setting("ORBITLATTICE_THREADS", DEFAULT_THREADS)


def get_n_cap() -> int:
    """Soft cap on n for exhaustive CLI runs, never above HARD_N_CAP."""
    return min(_int_setting("ORBITLATTICE_N_CAP", DEFAULT_N_CAP), HARD_N_CAP)


def get_log_file() -> str | None:
    return os.environ.get("ORBITLATTICE_LOG_FILE") or None


_level_raw = os.environ.get("ORBITLATTICE_LOG_LEVEL", "WARNING").upper()
try:
    LOG_LEVEL = LogLevel(_level_raw)
except ValueError:
    _logger.warning("Unknown ORBITLATTICE_LOG_LEVEL '%s', falling back to 'WARNING'", _level_raw)
    LOG_LEVEL = LogLevel.WARNING
