"""Optional polygonal refinement with a cubic sliding over each run of four
consecutive points."""
from typing import List

from ..polygonal import Polygonal, almost_equal_rel
from .lagrange import cubic_min_or_parabola


def sliding_cubic_suspects(poly: Polygonal) -> List[float]:
    """Predict minima hidden between the samples of a coarse polygonal.

    For each window of four consecutive points the cubic through them is
    minimised; minima strictly inside the window that are not already known
    abscissas are collected.

    Args:
        poly (Polygonal): The polygonal to inspect.

    Returns:
        list[float]: Suspect abscissas, left to right by window.
    """
    suspects: List[float] = []
    for i in range(len(poly) - 3):
        window = poly.points[i : i + 4]
        found = cubic_min_or_parabola(window)
        if found is None:
            continue
        if not window[0].x < found.x < window[3].x:
            continue
        known = [p.x for p in poly] + suspects
        if any(almost_equal_rel(found.x, x, poly.xtol) for x in known):
            continue
        suspects.append(found.x)
    return suspects
