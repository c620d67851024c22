"""Exceptions raised while searching for a minimum."""


class NonFiniteValueError(ValueError):
    """The objective returned NaN or an infinite value.

    Args:
        x (float): The abscissa at which the objective was evaluated.
        value (float): The offending value.
        trace (Trace, optional): The partial trace of the run, attached by
           the solver before the error leaves ``min_search_1d``.
    """

    def __init__(self, x: float, value: float, trace=None):
        super().__init__(
            f"The objective returned a non-finite value ({value}) at x={x}."
        )
        self.x = x
        self.value = value
        self.trace = trace


class DomainViolationError(AssertionError):
    """An abscissa outside [xinf, xsup] reached the evaluator."""


class EvaluationBudgetExhausted(RuntimeError):
    """The run has used every evaluation allowed by ``max_evals``."""


class DegenerateCubicError(ArithmeticError):
    """The cubic through four points is (numerically) a parabola."""
