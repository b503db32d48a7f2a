import logging
import os

LOGGER_NAME = os.environ.get("BETTI_LOGGER_NAME", "rect_betti")


def get_logger():
    """Get the current rect-betti logger instance."""
    return logging.getLogger(LOGGER_NAME)
