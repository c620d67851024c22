"""The polymin logger. Solver internals log at DEBUG, phases at INFO."""
import sys
from loguru import logger

LOG_FORMAT = "<level>{level}</level>\t{message}"

logger.remove()
_handler_id = logger.add(
    sys.stderr,
    colorize=True,
    format=LOG_FORMAT,
    filter="polymin",
    level="INFO",
)


def set_verbosity(verbose: bool = False) -> str:
    """Re-add the stderr sink at DEBUG (verbose) or INFO level.

    Args:
        verbose (bool): Show the per-step solver messages.

    Returns:
        str: The level now in use.
    """
    global _handler_id
    level = "DEBUG" if verbose else "INFO"
    logger.remove(_handler_id)
    _handler_id = logger.add(
        sys.stderr,
        colorize=True,
        format=LOG_FORMAT,
        filter="polymin",
        level=level,
    )
    return level
