"""
Logging Helpers - إعداد السجلات
structlog configured on top of the standard logging module
"""

import logging
import logging.handlers
import os
import sys

import structlog


def _configure_structlog(json_output: bool = False) -> None:
    renderer = structlog.processors.JSONRenderer() if json_output else structlog.dev.ConsoleRenderer(colors=False)
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt='iso'),
            structlog.processors.format_exc_info,
            renderer,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


# Library events go through stdlib logging even before setup_logging runs
_configure_structlog()


def setup_logging(config) -> None:
    """Configure structured logging; calling again replaces the previous handlers"""
    level = getattr(logging, str(config.LOG_LEVEL).upper(), logging.INFO)
    handlers = [logging.StreamHandler(sys.stderr)]

    if config.LOG_FILE:
        log_dir = os.path.dirname(config.LOG_FILE)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            config.LOG_FILE,
            maxBytes=10240000,
            backupCount=10
        )
        handlers.append(file_handler)

    logging.basicConfig(level=level, format='%(message)s', handlers=handlers, force=True)
    _configure_structlog(json_output=config.LOG_JSON)


def get_logger(name: str):
    return structlog.get_logger(name)
