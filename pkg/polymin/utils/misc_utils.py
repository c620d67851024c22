"""Misc utility functions."""
from typing import Iterable, List

from polymin.logger import logger


def parse_list(s: str) -> List[str]:
    """Parse the given comma-separated string into a list.

    Args:
        s (str): The string to parse.

    Returns:
        list: The list, empty if ``s`` is None or blank.
    """
    if s is None:
        return []
    return [i.strip() for i in s.split(",") if i.strip()]


def validate_names(requested: List[str], available: Iterable[str], what: str):
    """Validate that every requested name exists.

    Args:
        requested (list[str]): The names asked for on the command line.
        available (Iterable[str]): The known names.
        what (str): What the names refer to, e.g. "method".

    Raises:
        ValueError: If any name is unknown.
    """
    available = list(available)
    unknown = [n for n in requested if n not in available]
    if unknown:
        raise ValueError(
            f"Unknown {what}(s): {', '.join(unknown)}. "
            f"Choose from: {', '.join(available)}."
        )
    if len(set(requested)) != len(requested):
        logger.warning(f"Duplicate {what} names given, running each once.")
