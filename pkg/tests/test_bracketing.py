"""Tests for the exploration of the domain."""
import numpy as np
import pytest

from polymin import Domain
from polymin.bench.corpus import wild_oscillation
from polymin.bracketing import (
    K,
    adjust_to_boundary,
    examine_boundary_intervals,
    explore,
    interior_subdivide_if_cramped,
)
from polymin.interpolation import MIN_RATIO
from polymin.trace import (
    BOUNDARY_INTERVAL,
    PROPOSAL,
    RISE_CONFIRMED,
    SUBDIVISION,
    TRIPLET_FOUND,
)

DOMAIN = Domain(xinf=0.0, xsup=10.0)


@pytest.mark.parametrize(
    "xa, xb, xc, expected",
    [
        (0.0, 5.0, 12.0, (10.0, True)),
        (0.0, 5.0, 9.5, (10.0, False)),
        (0.0, 5.0, 8.0, (8.0, False)),
        # Downhill towards xinf
        (10.0, 5.0, -2.0, (0.0, True)),
        (10.0, 5.0, 0.5, (0.0, False)),
        (10.0, 5.0, 2.0, (2.0, False)),
    ],
)
def test_adjust_to_boundary(xa, xb, xc, expected):
    adjusted = adjust_to_boundary(xa, xb, xc, MIN_RATIO, DOMAIN)
    assert (adjusted.x, adjusted.clipped) == expected


def _seeded(state, *pairs):
    for x, y in pairs:
        state.insert(x, y)


def test_monotone_descent_reaches_the_boundary(make_state):
    state = make_state(lambda x: -x)
    _seeded(state, (0.0, 0.0), (1.0, -1.0))
    outcome = explore(state, 0.0, 1.0, 0.0, -1.0)
    assert outcome.boundary_reached
    assert (state.xmin, state.ymin) == (10.0, -10.0)
    assert state.poly[-1].x == 10.0
    assert not state.trace.of_kind(TRIPLET_FOUND)


def test_first_proposal(make_state):
    state = make_state(lambda x: -x)
    _seeded(state, (0.0, 0.0), (1.0, -1.0))
    explore(state, 0.0, 1.0, 0.0, -1.0)
    first = state.trace.of_kind(PROPOSAL)[0]
    assert first.x == pytest.approx(1.0 + K)


def test_quadratic_descends_then_confirms_rise(make_state):
    state = make_state(lambda x: (x - 2.0) ** 2)
    _seeded(state, (0.5, 2.25), (1.0, 1.0))
    outcome = explore(state, 0.5, 1.0, 2.25, 1.0)

    assert not outcome.boundary_reached
    assert outcome.expansion_count == 4
    assert state.nff == 4
    assert [p.x for p in state.poly] == pytest.approx(
        [0.5, 1.0, 1.309017, 1.809017, 2.618034, 3.927051], abs=1e-6
    )
    (found,) = state.trace.of_kind(TRIPLET_FOUND)
    assert found.detail["xa"] == 0.5
    assert found.detail["xa"] < 2.0 < found.detail["xc"]
    (rise,) = state.trace.of_kind(RISE_CONFIRMED)
    assert rise.x == pytest.approx(3.927051, abs=1e-6)


def test_descent_resumes_after_a_hump(make_state):
    state = make_state(wild_oscillation)
    fa, fb = wild_oscillation(9.0), wild_oscillation(9.3)
    _seeded(state, (9.0, fa), (9.3, fb))
    outcome = explore(state, 9.0, 9.3, fa, fb)

    assert state.trace.of_kind(TRIPLET_FOUND)
    assert not state.trace.of_kind(RISE_CONFIRMED)
    assert outcome.boundary_reached
    assert state.xmin == 10.0


@pytest.mark.parametrize(
    "count, existing, evaluations",
    [
        (1, None, 1),
        (0, None, 1),
        (2, None, 0),
        (1, 0.618034, 0),
    ],
)
def test_interior_subdivide_if_cramped(
    make_state, count, existing, evaluations
):
    state = make_state(lambda x: x * x)
    _seeded(state, (0.0, 0.0), (1.0, 1.0))
    if existing is not None:
        state.insert(existing, 0.5)
    interior_subdivide_if_cramped(state, count, 0.0, 1.0)
    assert state.nff == evaluations
    if count < 2:
        (event,) = state.trace.of_kind(SUBDIVISION)
        assert event.x == pytest.approx(K)
        assert event.detail["added"] == (existing is None)


def test_exploration_stays_in_the_domain(make_state):
    rng = np.random.default_rng(5)
    for _ in range(200):
        freq, phase = rng.uniform(0.1, 5.0), rng.uniform(0.0, 6.0)

        def f(x):
            return float(np.sin(freq * x + phase) + 0.01 * x)

        xa, xb = np.sort(rng.uniform(0.0, 10.0, 2))
        fa, fb = f(xa), f(xb)
        if fa == fb:
            continue
        if fb > fa:
            xa, xb, fa, fb = xb, xa, fb, fa
        state = make_state(f)
        _seeded(state, (xa, fa), (xb, fb))
        explore(state, xa, xb, fa, fb)
        xs = [p.x for p in state.poly]
        assert all(0.0 <= x <= 10.0 for x in xs)
        assert all(a < b for a, b in zip(xs, xs[1:]))
        assert state.ymin == min(p.y for p in state.poly)


@pytest.mark.parametrize(
    "f, xs, expected",
    [
        # Parabola through the three right-most points
        (lambda x: (x - 9.9) ** 2, (6.0, 9.5, 10.0), 9.9),
        # Linear data has no vertex: golden subdivision nearer the limit
        (lambda x: -x, (7.0, 8.0, 10.0), 8.0 + 2.0 * K),
        # The end is above its neighbour
        (lambda x: (x - 5.0) ** 2, (6.0, 8.0, 10.0), None),
        # The end is not on the limit
        (lambda x: -x, (5.0, 9.0, 9.5), None),
    ],
)
def test_examine_boundary_intervals(make_state, f, xs, expected):
    state = make_state(f)
    _seeded(state, *((x, f(x)) for x in xs))
    added = examine_boundary_intervals(state)
    events = state.trace.of_kind(BOUNDARY_INTERVAL)
    if expected is None:
        assert added == 0
        assert events == []
    else:
        assert added == 1
        (event,) = events
        assert event.x == pytest.approx(expected, abs=1e-9)
