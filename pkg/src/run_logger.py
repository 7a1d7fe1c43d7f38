import os
import json
import logging
from datetime import datetime
from typing import Any, Dict, Optional

from . import config

FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logger(name: str, log_dir: Optional[str] = None, level: Optional[str] = None) -> logging.Logger:
    """Setup and return a logger with the given name."""
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    log_dir = config.LOG_DIR if log_dir is None else log_dir
    level = config.LOG_LEVEL if level is None else level
    logger.setLevel(logging.DEBUG)
    formatter = logging.Formatter(FORMAT)

    # File handler only when a log directory is configured
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(os.path.join(log_dir, f"{name}.log"))
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    # Console goes to stderr so stdout carries results only
    console_handler = logging.StreamHandler()
    console_handler.setLevel(getattr(logging, level, logging.WARNING))
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    return logger


class RunLogger:
    """Writes one JSON record per failed structural check."""

    def __init__(self, log_dir: Optional[str] = None):
        self.log_dir = config.LOG_DIR if log_dir is None else log_dir
        self.logger = logging.getLogger("z2r")

    def _ensure_log_dir(self):
        if not os.path.exists(self.log_dir):
            os.makedirs(self.log_dir)

    def log_violation(self, check: str, alpha: int, beta: int, matrix_text: str,
                      details: Dict[str, Any] = None) -> Optional[str]:
        """Record a violated check to a timestamped file and return its path."""
        self.logger.warning(f"Check '{check}' failed for code of shape ({alpha},{beta})")
        if not self.log_dir:
            return None
        self._ensure_log_dir()

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
        filepath = os.path.join(self.log_dir, f"violation_{check}_{timestamp}.json")
        record = {
            "timestamp": datetime.now().isoformat(),
            "check": check,
            "alpha": alpha,
            "beta": beta,
            "matrix": matrix_text,
            "details": details or {},
        }
        with open(filepath, 'w') as f:
            json.dump(record, f, indent=2)
        return filepath
