"""The test-function corpus, with a dense-grid oracle for each function's
global minimum."""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from ..logger import logger
from ..solver_config import Domain

ORACLE_GRID_POINTS = 1_000_000
ORACLE_XATOL = 1e-10


@dataclass(frozen=True)
class OracleMinimum:
    x: float
    y: float
    n_local_minima: int
    note: str


def dense_grid_oracle(
    fn: Callable[[np.ndarray], np.ndarray],
    domain: Domain,
    n_points: int = ORACLE_GRID_POINTS,
) -> OracleMinimum:
    """Locate the global minimum of ``fn`` by sampling a uniform grid and
    polishing the best sample with a bounded scalar search between its grid
    neighbours.

    Args:
        fn (callable): Vectorised objective.
        domain (Domain): The interval to search.
        n_points (int): Grid size, end points included.

    Returns:
        OracleMinimum: The minimum and the number of strict local minima
           seen on the grid (interior and end points).
    """
    xs = np.linspace(domain.xinf, domain.xsup, n_points)
    ys = fn(xs)
    i = int(np.argmin(ys))
    x, y = float(xs[i]), float(ys[i])

    lo, hi = xs[max(i - 1, 0)], xs[min(i + 1, n_points - 1)]
    res = minimize_scalar(
        lambda t: float(fn(np.asarray(t, dtype=float))),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": ORACLE_XATOL},
    )
    if res.success and res.fun < y:
        x, y = float(res.x), float(res.fun)

    interior = (ys[1:-1] < ys[:-2]) & (ys[1:-1] < ys[2:])
    n_minima = int(np.count_nonzero(interior))
    n_minima += int(ys[0] < ys[1]) + int(ys[-1] < ys[-2])
    return OracleMinimum(
        x=x,
        y=y,
        n_local_minima=n_minima,
        note=f"dense grid of {n_points} points + bounded polish",
    )


@dataclass
class CorpusEntry:
    """A benchmark function.

    Args:
        name (str): Unique name, used on the command line.
        fn (callable): Vectorised closed form, numpy array in and out.
        domain (Domain): The search interval.
        description (str): Where the function comes from.
        start (tuple, optional): Fixed starting abscissas. When None the
           starting points are drawn from the run's seeded generator.
    """

    name: str
    fn: Callable[[np.ndarray], np.ndarray]
    domain: Domain
    description: str = ""
    start: Optional[Tuple[float, float]] = None
    tags: Tuple[str, ...] = field(default_factory=tuple)

    def __call__(self, x: float) -> float:
        return float(self.fn(np.asarray(x, dtype=float)))

    @cached_property
    def oracle(self) -> OracleMinimum:
        logger.debug(f"Computing the oracle minimum of '{self.name}'")
        return dense_grid_oracle(self.fn, self.domain)


def quadratic(x):
    return (x - 2.0) ** 2


def double_well(x):
    return x**4 - x**2


def sine_sum(x):
    return np.sin(x) + np.sin(10.0 * x / 3.0)


def wild_oscillation(x):
    return x**2 / 100.0 + np.sin(8.0 * x) * np.exp(x / 5.0)


def flat_then_wild(x):
    return 1e-3 * (10.0 - x) + np.where(
        x > 5.0, (x - 5.0) ** 2 * np.sin(6.0 * x), 0.0
    )


def needle(x):
    return 0.2 * np.sin(5.0 * x) - 3.0 * np.exp(-(((x - 7.3) / 0.5) ** 2))


def forrester(x):
    return (6.0 * x - 2.0) ** 2 * np.sin(12.0 * x - 4.0)


def gramacy_lee(x):
    return np.sin(10.0 * np.pi * x) / (2.0 * x) + (x - 1.0) ** 4


def rastrigin(x):
    return 10.0 + x**2 - 10.0 * np.cos(2.0 * np.pi * x)


def damped_quadratic(x):
    return -(16.0 * x**2 - 24.0 * x + 5.0) * np.exp(-x)


# Tag of the six functions of the multimodal acceptance suite.
CORE = "core"

_CORPUS: Dict[str, CorpusEntry] = {}


def register(entry: CorpusEntry, replace: bool = False) -> CorpusEntry:
    """Add a function to the corpus.

    Raises:
        ValueError: If the name is taken and ``replace`` is False.
    """
    if entry.name in _CORPUS and not replace:
        raise ValueError(
            f"A corpus function named '{entry.name}' already exists."
        )
    _CORPUS[entry.name] = entry
    return entry


def get_entry(name: str) -> CorpusEntry:
    try:
        return _CORPUS[name]
    except KeyError:
        raise ValueError(
            f"Unknown corpus function '{name}'. Available functions: "
            f"{', '.join(_CORPUS)}."
        ) from None


def list_entries(tag: str = None) -> List[CorpusEntry]:
    """Return the registered functions in registration order, optionally
    only those carrying ``tag``."""
    return [e for e in _CORPUS.values() if tag is None or tag in e.tags]


for _entry in (
    CorpusEntry(
        "quadratic",
        quadratic,
        Domain(xinf=0.0, xsup=10.0),
        "(x - 2)^2",
        start=(0.5, 1.0),
        tags=(CORE,),
    ),
    CorpusEntry(
        "double-well",
        double_well,
        Domain(xinf=-2.0, xsup=2.0),
        "quartic double well x^4 - x^2, two equal minima",
        start=(-1.9, -1.6),
        tags=(CORE,),
    ),
    CorpusEntry(
        "sine-sum",
        sine_sum,
        Domain(xinf=2.7, xsup=7.5),
        "sin(x) + sin(10x/3)",
        start=(4.6, 4.8),
        tags=(CORE,),
    ),
    CorpusEntry(
        "wild-oscillation",
        wild_oscillation,
        Domain(xinf=0.0, xsup=10.0),
        "x^2/100 + sin(8x) exp(x/5), growing oscillations",
        start=(9.0, 9.3),
        tags=(CORE,),
    ),
    CorpusEntry(
        "flat-then-wild",
        flat_then_wild,
        Domain(xinf=0.0, xsup=10.0),
        "nearly constant on [0, 5], then wild oscillations",
        start=(1.0, 2.0),
        tags=(CORE,),
    ),
    CorpusEntry(
        "needle",
        needle,
        Domain(xinf=0.0, xsup=10.0),
        "deep Gaussian needle at 7.3 among shallow sine valleys",
        # Magnified in golden ratio, this interval steps from one sine
        # valley bottom to the next until it meets the needle
        start=(0.166, 0.9425),
        tags=(CORE,),
    ),
    CorpusEntry(
        "forrester",
        forrester,
        Domain(xinf=0.0, xsup=1.0),
        "Forrester et al. (2008) one-dimensional test function",
    ),
    CorpusEntry(
        "gramacy-lee",
        gramacy_lee,
        Domain(xinf=0.5, xsup=2.5),
        "Gramacy & Lee (2012) one-dimensional test function",
    ),
    CorpusEntry(
        "rastrigin",
        rastrigin,
        Domain(xinf=-5.12, xsup=5.12),
        "one-dimensional Rastrigin function",
    ),
    CorpusEntry(
        "damped-quadratic",
        damped_quadratic,
        Domain(xinf=1.9, xsup=3.9),
        "-(16x^2 - 24x + 5) exp(-x)",
    ),
):
    register(_entry)
