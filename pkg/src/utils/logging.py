"""
Logging setup for sl12_chains.

Configures the shared ``sl12_app`` logger with a console handler and a rotating
file handler. Library modules, verification suites and the CLI all log through
this logger so that a run leaves a single, consistently formatted trail.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler

os.makedirs("./logs", exist_ok=True)

logger = logging.getLogger("sl12_app")
logger.setLevel(logging.INFO)

if not logger.handlers:
    # Rotating File Handler
    file_handler = RotatingFileHandler(
        "./logs/app.log",
        maxBytes=5 * 1024 * 1024,
        backupCount=3,
    )
    file_handler.setFormatter(
        logging.Formatter(
            "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
    )
    file_handler.setLevel(logging.INFO)

    # Stream Handler (console); stdout carries exported matrices
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(
        logging.Formatter("%(asctime)s [%(levelname)s] %(message)s", datefmt="%H:%M:%S")
    )
    stream_handler.setLevel(logging.DEBUG)

    logger.addHandler(file_handler)
    logger.addHandler(stream_handler)
