"""Fixtures for the tests."""
import os
from pathlib import Path

import pytest

from polymin import Domain, SolverConfig, Trace
from polymin.evaluation import EvalContext, SearchState
from polymin.polygonal import EvalPoint, Polygonal

FIXTURE_DIR = Path(__file__).parent.resolve() / "test_datasets"


@pytest.fixture
def solver_config_path(request):
    """Return the path of the given solver config e.g. solver-config-1.yml.

    Args:
        request (object): The request object.

    Returns:
        str: The config path.
    """
    name = request.param
    return os.path.join(FIXTURE_DIR, "config", f"{name}")


@pytest.fixture
def make_state():
    """Return a factory building a search state over an objective.

    The factory takes the objective, the domain limits and any extra
    ``SolverConfig`` fields; bounds are resolved against ``fb``.
    """

    def _make_state(objective, xinf=0.0, xsup=10.0, fb=0.0, **fields):
        config = SolverConfig(domain=Domain(xinf=xinf, xsup=xsup), **fields)
        ctx = EvalContext(objective, config.domain, Trace())
        bounds = config.bounds.resolve(fb, config.domain, config.ftol)
        return SearchState(ctx, config, bounds, 0.0, float("inf"))

    return _make_state


@pytest.fixture
def polygonal_of():
    """Return a factory building a polygonal from (x, y) pairs."""

    def _polygonal_of(pairs, xtol=1e-6):
        return Polygonal(xtol, [EvalPoint(x, y) for x, y in pairs])

    return _polygonal_of
