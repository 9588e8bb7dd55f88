import logging
import sys
import os
from typing import Optional


def setup_logging(debug: Optional[bool] = None, log_file: Optional[str] = 'ordinal_patterns.log'):
    """
    Set up logging configuration based on the ORDINAL_PATTERNS_DEBUG environment variable.

    Args:
        debug (Optional[bool]): Force debug mode on or off. When None the
            environment variable decides.
        log_file (Optional[str]): File receiving DEBUG records in debug mode.
            Pass None to log to the console only.

    Returns:
        logging.Logger: The package logger.
    """
    if debug is None:
        debug = os.getenv('ORDINAL_PATTERNS_DEBUG', 'false').lower() == 'true'

    logger = logging.getLogger('ordinal_patterns')

    # Remove existing handlers to avoid duplicates
    if logger.hasHandlers():
        logger.handlers.clear()

    if debug:
        logger.setLevel(logging.DEBUG)

        # stdout belongs to the CLI output
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(logging.INFO)

        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        if log_file:
            file_handler = logging.FileHandler(log_file)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        logger.propagate = True

    else:
        logger.setLevel(logging.WARNING)
        logger.addHandler(logging.NullHandler())

    return logger
