import logging
import json
import sys
import os
from datetime import datetime

from orbitlattice.config import LOG_LEVEL, get_log_file


class JsonFormatter(logging.Formatter):
    """Formats logs as JSON lines."""
    def format(self, record):
        log_obj = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "message": record.getMessage(),
            "module": record.module,
        }
        if hasattr(record, "props"):
            log_obj.update(record.props)

        if record.exc_info:
            log_obj["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_obj, default=str)


def setup_logging(log_file: str | None = None, level: str | None = None) -> logging.Logger:
    """Configures JSONL logging to an optional file and plain text to stderr.

    Standard output carries the documents the CLI emits, so nothing is logged there.
    """
    log_file = log_file if log_file is not None else get_log_file()
    level = level or LOG_LEVEL.value

    logger = logging.getLogger("orbitlattice")
    logger.setLevel(level)
    logger.handlers = []
    logger.propagate = False

    if log_file:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(JsonFormatter())
        logger.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter(
        '%(asctime)s | %(levelname)s | %(name)s | %(message)s'
    ))
    logger.addHandler(console_handler)

    return logger
