"""Golden-ratio constants and subdivision of a bracketing triplet."""
GOLD = 0.61803398875
CGOLD = 0.38196601125
# Below this ratio of residual gap to step, a proposal is snapped to the
# domain limit.
MIN_RATIO = CGOLD * CGOLD  # = 0.145898


def golden_subdivide(p1, p2, p3) -> float:
    """Place a new abscissa in the major subinterval of the triplet.

    Args:
        p1 (EvalPoint): Left point.
        p2 (EvalPoint): Centre point (the current minimum).
        p3 (EvalPoint): Right point.

    Returns:
        float: ``x2 - GOLD * (x3 - x2)`` if the left subinterval is the larger,
           else ``x2 + GOLD * (x2 - x1)``; always strictly inside (x1, x3).

    Raises:
        ValueError: If the abscissas are not strictly increasing.
    """
    x1, x2, x3 = p1.x, p2.x, p3.x
    if not x1 < x2 < x3:
        raise ValueError(
            f"Abscissas must be strictly increasing, got {x1}, {x2}, {x3}."
        )
    if x2 - x1 > x3 - x2:
        x = x2 - GOLD * (x3 - x2)
    else:
        x = x2 + GOLD * (x2 - x1)
    assert x1 < x < x3
    return x
