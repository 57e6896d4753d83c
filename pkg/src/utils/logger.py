"""
Logger Module
Package-wide logging for the verification engine; stderr only, so stdout
stays free for JSON results
"""

import logging
import os
import sys
from typing import Optional

LOGGER_NAME = "cubic_bridge"
DEFAULT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
FILE_FORMAT_DETAIL = '[%(filename)s:%(lineno)d]'


class LoggerManager:
    """Configures the cubic_bridge logger once per process"""

    _logger: Optional[logging.Logger] = None

    @classmethod
    def configure_logger(cls, log_file: str = None, level: str = "INFO",
                         fmt: str = DEFAULT_FORMAT) -> logging.Logger:
        """
        Attach a stderr handler and, when log_file is set, a file handler

        Later calls only adjust the level; handlers are attached once.

        Args:
            log_file: Path to log file, or None for stderr only
            level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            fmt: Record format; the file handler adds the source location

        Returns:
            The package logger
        """
        numeric = getattr(logging, level.upper())
        if cls._logger is not None:
            cls._logger.setLevel(numeric)
            for handler in cls._logger.handlers:
                handler.setLevel(numeric)
            return cls._logger

        logger = logging.getLogger(LOGGER_NAME)
        logger.setLevel(numeric)
        logger.propagate = False

        console = logging.StreamHandler(sys.stderr)
        console.setLevel(numeric)
        console.setFormatter(logging.Formatter(fmt))
        logger.addHandler(console)

        if log_file:
            log_dir = os.path.dirname(log_file)
            if log_dir:
                os.makedirs(log_dir, exist_ok=True)
            file_handler = logging.FileHandler(log_file)
            file_handler.setLevel(numeric)
            detailed = fmt.replace('%(message)s', f'{FILE_FORMAT_DETAIL} - %(message)s')
            file_handler.setFormatter(logging.Formatter(detailed))
            logger.addHandler(file_handler)

        cls._logger = logger
        return logger


def get_logger(name: str = None) -> logging.Logger:
    """
    Module logger under the package logger

    Args:
        name: Logger name (usually __name__)

    Returns:
        Logger instance whose records reach the LoggerManager handlers
    """
    logger = logging.getLogger(LOGGER_NAME)
    if name:
        return logger.getChild(name)
    return logger
