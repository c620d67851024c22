"""The public entry point: minimum search of a function of one variable over
a finite domain."""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel

from .bracketing import (
    examine_boundary_intervals,
    explore,
    interior_subdivide_if_cramped,
)
from .evaluation import EvalContext, SearchState
from .exceptions import EvaluationBudgetExhausted, NonFiniteValueError
from .interpolation import CGOLD, sliding_cubic_suspects
from .logger import logger
from .polygonal import almost_equal_rel
from .refinement import initial_gate, local_minima, refine_all
from .solver_config import Domain, SolverConfig
from .trace import SUSPECT, Trace

StartPoint = Union[float, Tuple[float, Optional[float]]]


class Termination(str, Enum):
    CONVERGED = "converged"
    BUDGET_EXHAUSTED = "budget-exhausted"
    GATED_OUT = "gated-out"
    CONSTANT_FUNCTION = "constant-function"


class LocalMinimum(BaseModel):
    x: float
    y: float
    refined: bool


class RunResult(BaseModel):
    xmin: float
    ymin: float
    local_minima: List[LocalMinimum]
    n_evals: int
    n_passes: int = 0
    termination: Termination
    trace: Trace


@dataclass(frozen=True)
class InitialPair:
    """Two distinct starting points ordered downhill: fb < fa."""

    xa: float
    fa: float
    xb: float
    fb: float


@dataclass(frozen=True)
class ConstantFunction:
    """No variation was found within the allowed number of trials."""

    x: float
    y: float


def _normalise_given(
    given: Sequence[StartPoint], dom: Domain
) -> List[Tuple[float, Optional[float]]]:
    if len(given) > 2:
        raise ValueError(
            f"At most two starting points can be given, got {len(given)}."
        )
    points = []
    for g in given:
        x, y = g if isinstance(g, (tuple, list)) else (g, None)
        x = float(x)
        if not dom.contains(x):
            raise ValueError(
                f"Starting point x={x} is outside [{dom.xinf}, {dom.xsup}]."
            )
        if y is not None:
            y = float(y)
            if not math.isfinite(y):
                raise ValueError(f"The ordinate given for x={x} is {y}.")
        points.append((x, y))
    return points


def _random_step(x: float, dom: Domain, rng: np.random.Generator) -> float:
    half_width = CGOLD * dom.width
    return float(
        np.clip(x + rng.uniform(-half_width, half_width), dom.xinf, dom.xsup)
    )


def acquire_initial_points(
    evaluate: Callable[[float], float],
    dom: Domain,
    given: Sequence[StartPoint],
    rng: np.random.Generator,
    max_trials: int,
    xtol: float = 1e-6,
) -> Union[InitialPair, ConstantFunction]:
    """Obtain two starting points with fb < fa.

    Missing points are generated at random: the first uniformly in the
    domain, the second by a random step of at most ``CGOLD`` times the domain
    width. While both values are equal further random steps are taken, up to
    ``max_trials`` steps in total.

    Args:
        evaluate (callable): The counted evaluator.
        dom (Domain): The domain.
        given (list): Zero, one or two points, each an abscissa or an
           ``(x, y)`` pair where y may be None.
        rng (np.random.Generator): Source of the random steps.
        max_trials (int): Maximum number of random steps.
        xtol (float): Relative tolerance on the variable.

    Returns:
        InitialPair | ConstantFunction: The ordered pair, or the last point
           seen if the function looked constant.
    """
    points = _normalise_given(given, dom)
    if not points:
        points.append((float(rng.uniform(dom.xinf, dom.xsup)), None))
    xa, fa = points[0]
    if fa is None:
        fa = evaluate(xa)

    trials = 0
    if len(points) == 2:
        xb, fb = points[1]
        if almost_equal_rel(xb, xa, xtol):
            raise ValueError(
                f"The starting points {xa} and {xb} must be distinct."
            )
        if fb is None:
            fb = evaluate(xb)
    else:
        xb, fb = xa, fa

    while fb == fa:
        if trials >= max_trials:
            logger.warning(
                f"No variation found after {trials} random steps, the "
                "function is assumed to be constant."
            )
            return ConstantFunction(xb, fb)
        trials += 1
        x = _random_step(xb, dom, rng)
        if almost_equal_rel(x, xa, xtol):
            continue
        xb, fb = x, evaluate(x)

    if fb > fa:
        xa, fa, xb, fb = xb, fb, xa, fa
    return InitialPair(xa, fa, xb, fb)


def _result(
    state_or_point,
    ctx: EvalContext,
    termination: Termination,
    poly=None,
    n_passes: int = 0,
) -> RunResult:
    xmin, ymin = state_or_point
    minima = []
    if poly is not None:
        minima = [
            LocalMinimum(x=p.x, y=p.y, refined=p.refined)
            for p in local_minima(poly)
        ]
    return RunResult(
        xmin=xmin,
        ymin=ymin,
        local_minima=minima,
        n_evals=ctx.nff,
        n_passes=n_passes,
        termination=termination,
        trace=ctx.trace,
    )


def _best_evaluated(trace: Trace) -> Tuple[float, float]:
    evaluated = [e for e in trace.evaluations() if e.y is not None]
    best = min(evaluated, key=lambda e: e.y)
    return best.x, best.y


def min_search_1d(
    objective: Callable[[float], float],
    given: Sequence[StartPoint] = (),
    config: SolverConfig = None,
    **config_fields,
) -> RunResult:
    """Search for the global minimum of ``objective`` over the domain.

    The domain is first explored from the starting pair, building a
    polygonal of evaluated points; then every promising valley of the
    polygonal is refined with parabolic and cubic interpolation.

    Args:
        objective (callable): The function to minimise, f(x) -> float.
        given (list, optional): Zero, one or two starting points, each an
           abscissa or an ``(x, y)`` pair (y may be None).
        config (SolverConfig, optional): The configuration. If omitted it is
           built from ``config_fields`` (``domain`` is then required).

    Returns:
        RunResult: Best point, local minima, evaluation count, termination
           reason and trace.

    Raises:
        ValueError: On invalid configuration or starting points.
        NonFiniteValueError: If the objective returns NaN or inf; the
           partial trace is attached as ``error.trace``.
    """
    if config is None:
        config = SolverConfig(**config_fields)
    dom = config.domain
    trace = Trace(level=config.trace_level)
    ctx = EvalContext(objective, dom, trace, config.max_evals)
    rng = np.random.default_rng(config.rng_seed)

    try:
        acquired = acquire_initial_points(
            ctx.evaluate_counted,
            dom,
            given,
            rng,
            config.max_initial_trials,
            config.xtol,
        )
    except EvaluationBudgetExhausted:
        logger.warning("The evaluation budget ran out acquiring two points.")
        return _result(
            _best_evaluated(trace), ctx, Termination.BUDGET_EXHAUSTED
        )
    except NonFiniteValueError as e:
        e.trace = trace
        raise

    if isinstance(acquired, ConstantFunction):
        return _result(
            (acquired.x, acquired.y), ctx, Termination.CONSTANT_FUNCTION
        )

    xa, fa, xb, fb = acquired.xa, acquired.fa, acquired.xb, acquired.fb
    bounds = config.bounds.resolve(fb, dom, config.ftol)
    if not initial_gate(xa, xb, fa, fb, bounds):
        logger.warning(
            f"The function does not show enough variation between x={xa} "
            f"and x={xb}, the search is not attempted."
        )
        return _result((xb, fb), ctx, Termination.GATED_OUT)

    state = SearchState(ctx, config, bounds, xb, fb)
    state.insert(xa, fa)
    state.insert(xb, fb)

    termination = Termination.CONVERGED
    try:
        outcome = explore(state, xa, xb, fa, fb)
        interior_subdivide_if_cramped(
            state, outcome.expansion_count, xa, xb
        )
        examine_boundary_intervals(state)
        if config.sliding_cubic_stage:
            for x in sliding_cubic_suspects(state.poly):
                added = state.insert(x).added
                state.record(SUSPECT, x=x, added=added)
        trace.snapshot("exploration", ctx.nff, state.poly, 0)
        logger.debug(
            f"Exploration done: {len(state.poly)} points, "
            f"{ctx.nff} evaluations"
        )
        refine_all(state)
    except EvaluationBudgetExhausted:
        logger.warning(
            f"Stopped after {ctx.nff} evaluations (max_evals reached)."
        )
        termination = Termination.BUDGET_EXHAUSTED
    except NonFiniteValueError as e:
        e.trace = trace
        raise

    return _result(
        (state.xmin, state.ymin),
        ctx,
        termination,
        poly=state.poly,
        n_passes=state.n_passes,
    )
