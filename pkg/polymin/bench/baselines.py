"""Reference minimizers the solver is compared against. Both start from a
bracketing triplet and count their evaluations the way the solver does."""
import math
from typing import Callable, Optional, Sequence

from pydantic import BaseModel

from ..evaluation import EvalContext, SearchState
from ..exceptions import EvaluationBudgetExhausted
from ..interpolation import CGOLD, GOLD
from ..polygonal import EvalPoint, Triplet
from ..refinement import refine_valley
from ..solver_config import Domain, SolverConfig
from ..trace import BRACKET, Trace


class BaselineResult(BaseModel):
    xmin: float
    ymin: float
    n_evals: int
    trace: Trace


def _check_bracket(bracket: Sequence[EvalPoint]) -> Triplet:
    if len(bracket) != 3:
        raise ValueError(f"A bracket has three points, got {len(bracket)}.")
    p1, p2, p3 = bracket
    if not p1.x < p2.x < p3.x:
        raise ValueError(
            f"Bracket abscissas must be increasing, got "
            f"{p1.x}, {p2.x}, {p3.x}."
        )
    if p2.y > p1.y or p2.y > p3.y:
        raise ValueError(
            f"The centre of the bracket ({p2.x}, {p2.y}) is above one of "
            "its ends."
        )
    return Triplet(p1, p2, p3)


def baseline_golden(
    objective: Callable[[float], float],
    bracket: Sequence[EvalPoint],
    tol: float = 1e-6,
    trace: Optional[Trace] = None,
) -> BaselineResult:
    """Classic golden-section search inside a bracketing triplet.

    The interval [p1.x, p3.x] shrinks by ``GOLD`` at every step until its
    width is below ``tol * (1 + |x|)``, x being the best point so far. Only
    the bracket centre's ordinate is reused.

    Args:
        objective (callable): The function to minimise.
        bracket (list[EvalPoint]): Three points with p2 not above p1, p3.
        tol (float): Relative tolerance on the variable.
        trace (Trace, optional): Receives evaluation and bracket events.

    Returns:
        BaselineResult: Best point found and number of evaluations.

    Raises:
        ValueError: If the bracket is invalid.
    """
    p1, p2, p3 = _check_bracket(bracket)
    trace = trace if trace is not None else Trace()
    ctx = EvalContext(objective, Domain(xinf=p1.x, xsup=p3.x), trace)

    a, b = p1.x, p3.x
    h = b - a
    c, d = a + CGOLD * h, a + GOLD * h
    yc, yd = ctx(c), ctx(d)
    best = min((p2.x, p2.y), (c, yc), (d, yd), key=lambda p: p[1])
    trace.record(BRACKET, ctx.nff, x=a, width=h)

    while h > tol * (1.0 + abs(best[0])):
        if yc < yd:
            b, d, yd = d, c, yc
            h = GOLD * h
            c = a + CGOLD * h
            yc = ctx(c)
            if yc < best[1]:
                best = (c, yc)
        else:
            a, c, yc = c, d, yd
            h = GOLD * h
            d = a + GOLD * h
            yd = ctx(d)
            if yd < best[1]:
                best = (d, yd)
        trace.record(BRACKET, ctx.nff, x=a, width=h)

    return BaselineResult(
        xmin=best[0], ymin=best[1], n_evals=ctx.nff, trace=trace
    )


def golden_eval_estimate(width: float, tol: float) -> int:
    """Evaluations golden-section needs to shrink ``width`` below ``tol``."""
    return math.ceil(math.log(width / tol) / math.log(1.0 / GOLD)) + 1


def _refine_from_triplet(
    objective: Callable[[float], float],
    triplet: Sequence[EvalPoint],
    config: SolverConfig,
    cubic_steps: bool,
    trace: Optional[Trace],
) -> BaselineResult:
    p1, p2, p3 = _check_bracket(triplet)
    config = config.model_copy(update={"cubic_steps": cubic_steps})
    trace = trace if trace is not None else Trace(level=config.trace_level)
    ctx = EvalContext(objective, config.domain, trace, config.max_evals)
    bounds = config.bounds.resolve(p2.y, config.domain, config.ftol)
    state = SearchState(ctx, config, bounds, p2.x, p2.y)
    for p in (p1, p2, p3):
        state.insert(p.x, p.y)

    try:
        refine_valley(state, Triplet(*state.poly.points), state.poly)
    except EvaluationBudgetExhausted:
        pass
    return BaselineResult(
        xmin=state.xmin, ymin=state.ymin, n_evals=ctx.nff, trace=trace
    )


def baseline_parabola_only(
    objective: Callable[[float], float],
    triplet: Sequence[EvalPoint],
    config: SolverConfig,
    trace: Optional[Trace] = None,
) -> BaselineResult:
    """Refine one valley with successive parabolas, subdividing in golden
    ratio when the parabola gives nothing new. The stopping rules are those
    of the solver's refinement."""
    return _refine_from_triplet(objective, triplet, config, False, trace)


def mixed_local(
    objective: Callable[[float], float],
    triplet: Sequence[EvalPoint],
    config: SolverConfig,
    trace: Optional[Trace] = None,
) -> BaselineResult:
    """Refine one valley with the solver's mixed parabola/cubic steps."""
    return _refine_from_triplet(objective, triplet, config, True, trace)
