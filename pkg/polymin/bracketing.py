"""Exploration of the domain: the initial interval is magnified in golden
ratio until a confirmed rise of the function or the domain boundary."""
from dataclasses import dataclass

from .evaluation import SearchState
from .interpolation import GOLD, MIN_RATIO, parabola_min
from .logger import logger
from .solver_config import Domain
from .trace import (
    ADJUSTMENT,
    BOUNDARY_INTERVAL,
    PROPOSAL,
    RISE_CONFIRMED,
    SUBDIVISION,
    TRIPLET_FOUND,
)

# (1 + K) is the amplification factor of the current interval.
K = GOLD


@dataclass(frozen=True)
class BoundaryAdjust:
    x: float
    clipped: bool


@dataclass(frozen=True)
class ExploreOutcome:
    expansion_count: int
    boundary_reached: bool


def adjust_to_boundary(
    xa: float, xb: float, xc: float, min_ratio: float, dom: Domain
) -> BoundaryAdjust:
    """Adjust a proposal xc that lies beyond xb, in the direction xa -> xb.

    If xc is outside the domain the closest limit is returned with
    ``clipped=True``. If it is inside but the gap left to the limit is small
    compared with the step (ratio below ``min_ratio``) the limit is returned
    with ``clipped=False``. Otherwise xc is returned unchanged.

    Args:
        xa (float): Start of the current interval.
        xb (float): End of the current interval.
        xc (float): The proposed abscissa.
        min_ratio (float): Smallest gap/step ratio worth a separate step.
        dom (Domain): The domain.

    Returns:
        BoundaryAdjust: The adjusted abscissa and the clipped flag.
    """
    if xb > xa:
        if xc >= dom.xsup:
            return BoundaryAdjust(dom.xsup, True)
        if (dom.xsup - xc) / (xc - xb) < min_ratio:
            return BoundaryAdjust(dom.xsup, False)
        return BoundaryAdjust(xc, False)
    if xc <= dom.xinf:
        return BoundaryAdjust(dom.xinf, True)
    if (xc - dom.xinf) / (xb - xc) < min_ratio:
        return BoundaryAdjust(dom.xinf, False)
    return BoundaryAdjust(xc, False)


def _propose(state: SearchState, xa: float, xb: float, label: str):
    xc = xb + K * (xb - xa)
    state.record(PROPOSAL, x=xc, step=label)
    adjusted = adjust_to_boundary(
        xa, xb, xc, MIN_RATIO, state.config.domain
    )
    if adjusted.x != xc:
        state.record(ADJUSTMENT, x=adjusted.x, clipped=adjusted.clipped)
    return adjusted


def explore(
    state: SearchState, xa: float, xb: float, fa: float, fb: float
) -> ExploreOutcome:
    """Extend [xa, xb] downhill until a rise is confirmed or the boundary is
    reached, adding every evaluated point to the polygonal.

    Both points must already be in ``state.poly`` and ``fb < fa``. After a
    first rise (fc >= fb) one more step is probed: if the function rises
    again the exploration stops, otherwise the descent continues from there.

    Args:
        state (SearchState): The run state.
        xa (float): First point of the initial interval.
        xb (float): Second (lower) point of the initial interval.
        fa (float): f(xa).
        fb (float): f(xb), with fb < fa.

    Returns:
        ExploreOutcome: The number of full (non-clipped) expansions and
           whether the exploration ended at the domain boundary.
    """
    expansion_count = 0
    while True:
        adjusted = _propose(state, xa, xb, "expand")
        if not adjusted.clipped:
            expansion_count += 1
        outcome = state.insert(adjusted.x)
        if outcome.duplicate:
            # Boundary reached, or |xb - xa| ~ xtol
            return ExploreOutcome(expansion_count, True)
        xc, fc = outcome.point.x, outcome.point.y

        if fc >= fb:
            state.record(TRIPLET_FOUND, x=xb, y=fb, xa=xa, xc=xc)
            adjusted = _propose(state, xa, xc, "probe")
            if not adjusted.clipped:
                expansion_count += 1
            outcome = state.insert(adjusted.x)
            if outcome.duplicate:
                return ExploreOutcome(expansion_count, True)
            xd, fd = outcome.point.x, outcome.point.y
            if fd >= fc:
                state.record(RISE_CONFIRMED, x=xd, y=fd)
                logger.debug(f"Rise confirmed at x={xd}")
                return ExploreOutcome(expansion_count, False)
            # Descent again after a hump
            xa, fa = xc, fc
            xb, fb = xd, fd
        else:
            xb, fb = xc, fc

        if adjusted.clipped:
            return ExploreOutcome(expansion_count, True)


def interior_subdivide_if_cramped(
    state: SearchState, expansion_count: int, xaa: float, xbb: float
):
    """Look inside the initial interval when it could not be expanded at
    least twice (it is then large with respect to the domain).

    Args:
        state (SearchState): The run state.
        expansion_count (int): Full expansions performed by :func:`explore`.
        xaa (float): First point of the original initial interval.
        xbb (float): Second point of the original initial interval.
    """
    if expansion_count >= 2:
        return
    xc = xaa + K * (xbb - xaa)
    outcome = state.insert(xc)
    state.record(SUBDIVISION, x=xc, added=outcome.added)


def examine_boundary_intervals(state: SearchState) -> int:
    """Look inside the last interval of the polygonal when its end lies on a
    domain limit and is lower than its neighbour.

    A step snapped or clipped to the limit can jump over the minimum, leaving
    no valley for the refinement. The minimum of the parabola through the
    three end points is evaluated when it falls strictly inside that interval;
    otherwise the interval is subdivided in golden ratio, nearer the limit.

    Args:
        state (SearchState): The run state, after the exploration.

    Returns:
        int: The number of points added.
    """
    dom = state.config.domain
    added = 0
    for limit, end, inner, third in (
        (dom.xinf, 0, 1, 2),
        (dom.xsup, -1, -2, -3),
    ):
        points = state.poly.points
        if len(points) < 2:
            return added
        p_end, p_inner = points[end], points[inner]
        if p_end.x != limit or not p_end.y < p_inner.y:
            continue
        lo, hi = sorted((p_end.x, p_inner.x))
        xc = None
        if len(points) > 2:
            nodes = sorted((p_end, p_inner, points[third]), key=lambda p: p.x)
            found = parabola_min(*nodes)
            if found is not None and lo < found.x < hi:
                xc = found.x
        if xc is None:
            xc = p_inner.x + GOLD * (p_end.x - p_inner.x)
        outcome = state.insert(xc)
        added += outcome.added
        state.record(BOUNDARY_INTERVAL, x=xc, added=outcome.added)
        logger.debug(f"Examined the interval next to the limit {limit}")
    return added
