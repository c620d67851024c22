"""Refinement of the local minima of the polygonal with parabolic and cubic
interpolation, and golden-ratio subdivision as a last resort."""
import math
from typing import List, Optional, Sequence

from .evaluation import SearchState
from .interpolation import (
    CUBIC,
    PARABOLA,
    cubic_min_or_parabola,
    golden_subdivide,
    parabola_min,
)
from .logger import logger
from .polygonal import EvalPoint, Polygonal, Triplet
from .solver_config import BoundsConfig
from .trace import (
    CANDIDATE,
    INTERPOLATION,
    PASS_END,
    PASS_START,
    PROPOSAL,
    VALLEY_END,
)

EPS2 = 1e-12
GOLDEN = "golden"

# Why refine_valley stopped.
CONVERGED = "converged"
EXHAUSTED = "exhausted"
FAILED = "failed"
NO_TRIPLET = "no-triplet"


def initial_gate(
    xa: float, xb: float, fa: float, fb: float, bounds: BoundsConfig
) -> bool:
    """Decide whether the starting pair shows enough variation to proceed.

    With bounds enabled the search is abandoned when both the drop
    ``fb - fa`` and the slope of the initial segment are shallower than the
    configured thresholds.

    Returns:
        bool: True to proceed.
    """
    if not bounds.enabled:
        return True
    drop = fb - fa
    slope = drop / (abs(xb - xa) + EPS2)
    return not (drop > bounds.delta_bound and slope > bounds.slope_bound)


def candidate_rejection(
    p1: EvalPoint,
    p2: EvalPoint,
    p3: EvalPoint,
    bounds: BoundsConfig,
    fpmin: Optional[float],
    fpmax: Optional[float],
    ftol: float,
) -> Optional[str]:
    """Return the name of the gate that rejects the valley centred on p2, or
    None if it should be refined."""
    if p2.refined:
        return "refined"
    deltap = p2.y - p1.y
    deltaq = p3.y - p2.y
    if not bounds.enabled:
        ytol = ftol * (1.0 + abs(p2.y))
        if deltap < -ytol or deltaq > ytol:
            return None
        return "flat"
    if not (deltap < bounds.delta_bound or deltaq > -bounds.delta_bound):
        return "delta"
    if not (
        deltap / (p2.x - p1.x) < bounds.slope_bound
        or deltaq / (p3.x - p2.x) < bounds.slope_bound
    ):
        return "slope"
    # p2 must be in the lower band of the values found so far
    if not p2.y < fpmax - (fpmax - fpmin) * bounds.k_ysup:
        return "band"
    return None


def candidate_gate(
    p1: EvalPoint,
    p2: EvalPoint,
    p3: EvalPoint,
    bounds: BoundsConfig,
    fpmin: Optional[float],
    fpmax: Optional[float],
    ftol: float,
) -> bool:
    """True if the valley centred on p2 should be refined."""
    return (
        candidate_rejection(p1, p2, p3, bounds, fpmin, fpmax, ftol) is None
    )


def _four_around(poly: Polygonal, i: int) -> Sequence[EvalPoint]:
    """The four points nearest to position i: i-2..i+1 or i-1..i+2, taking
    the side whose fourth point is closer."""
    x02 = poly[i].x - poly[i - 2].x if i >= 2 else math.inf
    x24 = poly[i + 2].x - poly[i].x if i + 2 < len(poly) else math.inf
    if x02 < x24:
        return poly.points[i - 2 : i + 2]
    return poly.points[i - 1 : i + 3]


class _ValleyRefiner:
    """Loop state of :func:`refine_valley`."""

    def __init__(self, state: SearchState, poly: Polygonal, p2: EvalPoint):
        self.state = state
        self.poly = poly
        self.xlocmin = p2.x
        self.ylocmin = p2.y
        self.n_failed = 0
        self.changes = 0

    @property
    def may_continue(self) -> bool:
        return self.n_failed < self.state.bounds.n_max_failed

    def position(self) -> int:
        return self.poly.index_of(self.xlocmin)

    def current(self) -> Optional[Triplet]:
        return self.poly.triplet_at(self.position())

    def interpolate(
        self, kind: str, nodes: Sequence[EvalPoint], lo: float, hi: float
    ) -> Optional[float]:
        if kind == PARABOLA:
            found = parabola_min(*nodes)
        else:
            found = cubic_min_or_parabola(nodes)
        self.state.record(
            INTERPOLATION,
            x=found.x if found else None,
            y=found.y_predicted if found else None,
            method=found.kind if found else kind,
            nodes=[[p.x, p.y] for p in nodes],
        )
        if found is None or not lo < found.x < hi:
            return None
        return found.x

    def attempt(self, x: float, step: str):
        """Insert x; update the local and global minima and the failure
        counter. Returns (outcome, improved_local)."""
        ymin_before = self.state.ymin
        outcome = self.state.insert(x, poly=self.poly)
        improved = False
        if outcome.added:
            self.changes += 1
            y = outcome.point.y
            if y < self.ylocmin:
                self.xlocmin, self.ylocmin = outcome.point.x, y
                improved = True
            if y < ymin_before:
                self.n_failed = 0
            else:
                self.n_failed += 1
        self.state.record(
            PROPOSAL,
            x=x,
            y=outcome.point.y if outcome.added else None,
            step=step,
            added=outcome.added,
            improved=improved,
            n_failed=self.n_failed,
        )
        return outcome, improved

    def golden(self) -> bool:
        triplet = self.current()
        if triplet is None:
            return False
        outcome, _ = self.attempt(golden_subdivide(*triplet), GOLDEN)
        return outcome.added

    def step(self, p1: EvalPoint, p2: EvalPoint, p3: EvalPoint) -> bool:
        """One iteration; returns False when the proposal repeats a known
        abscissa, i.e. the valley is static."""
        cubic_steps = self.state.config.cubic_steps
        lo, hi = p1.x, p3.x

        xtry = self.interpolate(PARABOLA, (p1, p2, p3), lo, hi)
        if xtry is not None:
            outcome, improved = self.attempt(xtry, PARABOLA)
            if outcome.added:
                if improved or not self.may_continue or not cubic_steps:
                    return True
                # The parabola did not improve: the cubic through the
                # triplet and the new point is tried.
                nodes = sorted(
                    (p1, p2, p3, outcome.point), key=lambda p: p.x
                )
                xtry = self.interpolate(CUBIC, nodes, lo, hi)
                if xtry is None:
                    return self.golden()
                outcome, _ = self.attempt(xtry, CUBIC)
                return outcome.added

        if cubic_steps and len(self.poly) > 3:
            nodes = _four_around(self.poly, self.position())
            xtry = self.interpolate(CUBIC, nodes, lo, hi)
            if xtry is not None:
                outcome, _ = self.attempt(xtry, CUBIC)
                return outcome.added

        # Subdivide in golden ratio when no interpolant applies
        return self.golden()


def refine_valley(
    state: SearchState, triplet: Triplet, poly: Polygonal
) -> int:
    """Search for the true minimum between triplet.p1 and triplet.p3.

    New points go into ``poly`` (the working polygonal). The loop ends when
    the triplet around the current minimum is converged in y, when no new
    abscissa can be added, or after ``n_max_failed`` consecutive evaluations
    that did not improve the global minimum. The current minimum is marked
    refined.

    Args:
        state (SearchState): The run state.
        triplet (Triplet): The valley, with p2 the least of the three.
        poly (Polygonal): The polygonal receiving the new points.

    Returns:
        int: The number of points added.
    """
    ftol = state.config.ftol
    refiner = _ValleyRefiner(state, poly, triplet.p2)
    while True:
        current = refiner.current()
        if current is None:
            reason = NO_TRIPLET
            break
        p1, p2, p3 = current
        p2.refined = True
        ytol = ftol * (1.0 + abs(p2.y))
        if p1.y - p2.y < ytol and p3.y - p2.y < ytol:
            reason = CONVERGED
            break
        if not refiner.may_continue:
            reason = FAILED
            break
        if not refiner.step(p1, p2, p3):
            reason = EXHAUSTED
            break

    # Marked anyway, so it is not examined again
    poly[refiner.position()].refined = True
    state.record(
        VALLEY_END,
        x=refiner.xlocmin,
        y=refiner.ylocmin,
        reason=reason,
        changes=refiner.changes,
    )
    logger.debug(
        f"Valley refined to ({refiner.xlocmin}, {refiner.ylocmin}): "
        f"{reason} after {refiner.changes} new points"
    )
    return refiner.changes


def refine_all(state: SearchState) -> int:
    """Refine every promising valley of the polygonal, pass after pass, until
    a pass adds no points.

    Each pass scans a snapshot of the polygonal while new points go to the
    working copy (``state.poly``), so a pass never scans its own insertions.

    Args:
        state (SearchState): The run state, after the exploration phase.

    Returns:
        int: The number of passes.
    """
    bounds = state.bounds
    ftol = state.config.ftol
    pass_index = 0
    while True:
        pass_index += 1
        state.n_passes = pass_index
        snapshot = state.poly.copy()
        fpmin = fpmax = None
        if bounds.enabled:
            fpmin, fpmax = snapshot.ordinate_range()
        state.record(PASS_START, pass_index=pass_index, n_points=len(snapshot))

        changes = 0
        for p1, p2, p3 in snapshot.scan_valleys():
            gate = candidate_rejection(p1, p2, p3, bounds, fpmin, fpmax, ftol)
            state.record(
                CANDIDATE, x=p2.x, y=p2.y, accepted=gate is None, gate=gate
            )
            if gate is None:
                changes += refine_valley(
                    state, Triplet(p1, p2, p3), state.poly
                )

        state.trace.snapshot(
            f"pass-{pass_index}", state.nff, state.poly, pass_index
        )
        state.record(PASS_END, pass_index=pass_index, changes=changes)
        logger.debug(f"Pass {pass_index} added {changes} points")
        if not changes:
            return pass_index


def local_minima(poly: Polygonal) -> List[EvalPoint]:
    """Valley centres that are not above either neighbour."""
    return [
        p2
        for p1, p2, p3 in poly.scan_valleys()
        if p2.y <= p1.y and p2.y <= p3.y
    ]
