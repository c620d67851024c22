"""Counted evaluation of the objective and the per-run search state."""
import math
from typing import Callable, Optional

from .exceptions import (
    DomainViolationError,
    EvaluationBudgetExhausted,
    NonFiniteValueError,
)
from .polygonal import EvalPoint, InsertOutcome, Polygonal
from .solver_config import BoundsConfig, Domain, SolverConfig
from .trace import EVALUATION, Trace


class EvalContext:
    """Wraps the objective, counting every call.

    Args:
        objective (callable): The function to minimise.
        domain (Domain): Abscissas outside it are never evaluated.
        trace (Trace): Receives one ``evaluation`` event per call.
        max_evals (int, optional): Hard limit on the number of calls.
    """

    def __init__(
        self,
        objective: Callable[[float], float],
        domain: Domain,
        trace: Trace,
        max_evals: Optional[int] = None,
    ):
        self.objective = objective
        self.domain = domain
        self.trace = trace
        self.max_evals = max_evals
        self.nff = 0

    @property
    def exhausted(self) -> bool:
        return self.max_evals is not None and self.nff >= self.max_evals

    def evaluate_counted(self, x: float) -> float:
        """Evaluate the objective at x and increment the evaluation count.

        Args:
            x (float): The abscissa, inside the closed domain.

        Returns:
            float: The value of the objective.

        Raises:
            DomainViolationError: If x lies outside the domain.
            EvaluationBudgetExhausted: If max_evals calls were already made.
            NonFiniteValueError: If the objective returns NaN or inf.
        """
        if not self.domain.contains(x):
            raise DomainViolationError(
                f"x={x} is outside [{self.domain.xinf}, {self.domain.xsup}]."
            )
        if self.exhausted:
            raise EvaluationBudgetExhausted(
                f"The limit of {self.max_evals} evaluations was reached."
            )
        self.nff += 1
        y = float(self.objective(x))
        if not math.isfinite(y):
            self.trace.record(EVALUATION, self.nff, x=x, non_finite=repr(y))
            raise NonFiniteValueError(x, y)
        self.trace.record(EVALUATION, self.nff, x=x, y=y)
        return y

    __call__ = evaluate_counted


class SearchState:
    """Everything a single run mutates: evaluator, working polygonal and the
    running global minimum.

    Args:
        ctx (EvalContext): The counted evaluator.
        config (SolverConfig): The run configuration.
        bounds (BoundsConfig): Bounds with both thresholds resolved.
        xmin (float): Abscissa of the initial best point.
        ymin (float): Ordinate of the initial best point.
    """

    def __init__(
        self,
        ctx: EvalContext,
        config: SolverConfig,
        bounds: BoundsConfig,
        xmin: float,
        ymin: float,
    ):
        self.ctx = ctx
        self.config = config
        self.bounds = bounds
        self.poly = Polygonal(config.xtol)
        self.xmin = xmin
        self.ymin = ymin
        self.n_passes = 0

    @property
    def trace(self) -> Trace:
        return self.ctx.trace

    @property
    def nff(self) -> int:
        return self.ctx.nff

    def record(self, kind: str, x: float = None, y: float = None, **detail):
        self.ctx.trace.record(kind, self.ctx.nff, x=x, y=y, **detail)

    def update_best(self, point: EvalPoint) -> bool:
        """Adopt the point as global minimum if it is lower; return True if
        it was."""
        if point.y < self.ymin:
            self.xmin, self.ymin = point.x, point.y
            return True
        return False

    def insert(
        self, x: float, y: float = None, poly: Polygonal = None
    ) -> InsertOutcome:
        """Insert x into the working polygonal (evaluating it if needed) and
        keep the global minimum up to date."""
        poly = self.poly if poly is None else poly
        outcome = poly.insert_point(x, y, evaluate=self.ctx.evaluate_counted)
        if outcome.added:
            self.update_best(outcome.point)
        return outcome
