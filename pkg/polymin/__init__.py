"""polymin searches for the global minimum of a function of one variable
over a finite interval, with polygonal exploration and parabolic/cubic
refinement."""
from .solver import (
    LocalMinimum,
    RunResult,
    Termination,
    acquire_initial_points,
    min_search_1d,
)
from .solver_config import BoundsConfig, Domain, SolverConfig, TraceLevel
from .exceptions import (
    DegenerateCubicError,
    DomainViolationError,
    EvaluationBudgetExhausted,
    NonFiniteValueError,
)
from .trace import TRACE_SCHEMA_VERSION, Trace
