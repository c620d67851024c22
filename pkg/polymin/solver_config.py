"""Validated configuration of a minimum search."""
from enum import Enum
from typing import Optional
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PositiveFloat,
    PositiveInt,
    model_validator,
)


class ConfiguredBaseModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class TraceLevel(str, Enum):
    FULL = "full"
    EVALUATIONS = "evaluations"


class Domain(ConfiguredBaseModel):
    """The closed interval [xinf, xsup] over which the function is defined."""

    xinf: float
    xsup: float

    @model_validator(mode="after")
    def _check_limits(self):
        if not self.xsup > self.xinf:
            raise ValueError(
                f"The domain upper limit ({self.xsup}) must be greater than "
                f"the lower limit ({self.xinf})."
            )
        return self

    @property
    def width(self) -> float:
        return self.xsup - self.xinf

    def contains(self, x: float) -> bool:
        return self.xinf <= x <= self.xsup


class BoundsConfig(ConfiguredBaseModel):
    """Thresholds used to skip the refinement of unpromising valleys.

    ``delta_bound`` and ``slope_bound`` may be left unset, in which case they
    are derived from the starting ordinate when the run begins
    (see :meth:`resolve`).
    """

    enabled: bool = True
    delta_bound: Optional[float] = Field(default=None, lt=0.0)
    slope_bound: Optional[float] = Field(default=None, lt=0.0)
    k_ysup: float = Field(default=0.5, ge=0.0, le=1.0)
    n_max_failed: PositiveInt = 4

    def resolve(
        self, fb: float, domain: Domain, ftol: float
    ) -> "BoundsConfig":
        """Return a copy in which both thresholds are set.

        Args:
            fb (float): The ordinate of the best starting point.
            domain (Domain): The search domain.
            ftol (float): Relative tolerance on the function.

        Returns:
            BoundsConfig: The resolved bounds.
        """
        delta = -ftol * (1.0 + abs(fb))
        return self.model_copy(
            update={
                "delta_bound": (
                    self.delta_bound if self.delta_bound is not None else delta
                ),
                "slope_bound": (
                    self.slope_bound
                    if self.slope_bound is not None
                    else delta / domain.width
                ),
            }
        )


class SolverConfig(ConfiguredBaseModel):
    domain: Domain
    xtol: PositiveFloat = 1e-6
    ftol: PositiveFloat = 1e-6
    bounds: BoundsConfig = BoundsConfig()
    sliding_cubic_stage: bool = False
    # False gives parabola -> golden refinement only
    cubic_steps: bool = True
    max_initial_trials: PositiveInt = 16
    max_evals: Optional[PositiveInt] = None
    rng_seed: int = 0
    trace_level: TraceLevel = TraceLevel.FULL
