"""Tests for the corpus, the baselines, the benchmark harness and the
plot-data export."""
import json
import os

import numpy as np
import pandas as pd
import pytest

from polymin import Domain, SolverConfig, min_search_1d
from polymin.bench import (
    METHODS,
    baseline_golden,
    baseline_parabola_only,
    dense_grid_oracle,
    export_plot_data,
    first_bracket,
    get_entry,
    list_entries,
    mixed_local,
    register,
    run_benchmark,
)
from polymin.bench.baselines import golden_eval_estimate
from polymin.bench.corpus import CORE, double_well, quadratic
from polymin.bench.export import INTERPOLANT_SAMPLES
from polymin.interpolation import GOLD
from polymin.polygonal import EvalPoint
from polymin.trace import BRACKET, INTERPOLATION, PROPOSAL
from polymin.utils import (
    load_solver_config,
    load_trace_jsonl,
    save_trace_jsonl,
)

DOMAIN = Domain(xinf=0.0, xsup=10.0)


def _bracket(f, xs):
    return [EvalPoint(x, f(x)) for x in xs]


def test_corpus_registry():
    names = [e.name for e in list_entries()]
    assert len(names) == 10
    assert len(list_entries(CORE)) == 6
    assert get_entry("needle").domain == DOMAIN
    with pytest.raises(ValueError):
        get_entry("no-such-function")
    with pytest.raises(ValueError):
        register(get_entry("quadratic"))
    register(get_entry("quadratic"), replace=True)
    assert [e.name for e in list_entries()] == names


def test_entries_evaluate_scalars_and_arrays():
    entry = get_entry("double-well")
    assert isinstance(entry(0.5), float)
    assert entry(0.5) == pytest.approx(0.0625 - 0.25)
    assert entry.fn(np.array([0.0, 1.0])) == pytest.approx([0.0, 0.0])


def test_dense_grid_oracle():
    oracle = dense_grid_oracle(quadratic, DOMAIN)
    assert oracle.x == pytest.approx(2.0, abs=1e-8)
    assert oracle.y == pytest.approx(0.0, abs=1e-12)
    assert oracle.n_local_minima == 1

    oracle = dense_grid_oracle(double_well, Domain(xinf=-2.0, xsup=2.0))
    assert abs(oracle.x) == pytest.approx(np.sqrt(0.5), abs=1e-6)
    assert oracle.y == pytest.approx(-0.25, abs=1e-12)
    assert oracle.n_local_minima == 2


def test_golden_baseline():
    def f(x):
        return (x - 2.0) ** 2

    result = baseline_golden(f, _bracket(f, (0.0, 1.0, 5.0)), tol=1e-6)
    assert result.xmin == pytest.approx(2.0, abs=1e-5)
    assert result.n_evals == len(result.trace.evaluations())
    assert result.n_evals <= golden_eval_estimate(5.0, 1e-6)

    widths = [e.detail["width"] for e in result.trace.of_kind(BRACKET)]
    assert widths[0] == 5.0
    ratios = np.array(widths[1:]) / np.array(widths[:-1])
    assert ratios == pytest.approx(GOLD)


@pytest.mark.parametrize(
    "xs",
    [
        (0.0, 2.0, 1.0),
        # The centre is above the right end
        (0.0, 1.0, 1.5),
        (0.0, 1.0),
    ],
)
def test_baselines_reject_bad_brackets(xs):
    def f(x):
        return (x - 2.0) ** 2

    config = SolverConfig(domain=DOMAIN)
    with pytest.raises(ValueError):
        baseline_golden(f, _bracket(f, xs))
    with pytest.raises(ValueError):
        baseline_parabola_only(f, _bracket(f, xs), config)


def test_parabola_baseline_first_step_is_the_vertex():
    def f(x):
        return (x - 2.0) ** 2

    config = SolverConfig(domain=DOMAIN)
    result = baseline_parabola_only(f, _bracket(f, (0.0, 1.0, 3.0)), config)
    first = result.trace.evaluations()[0]
    assert first.x == pytest.approx(2.0, abs=1e-12)
    assert result.xmin == pytest.approx(2.0, abs=1e-9)
    steps = {e.detail["step"] for e in result.trace.of_kind(PROPOSAL)}
    assert "cubic" not in steps

    mixed = mixed_local(f, _bracket(f, (0.0, 1.0, 3.0)), config)
    assert mixed.trace.evaluations()[0].x == first.x


def test_mixed_steps_beat_parabolas_on_a_cubic():
    def f(x):
        return x**3 - 3.0 * x

    config = SolverConfig(domain=DOMAIN)
    bracket = _bracket(f, (0.0, 0.9, 2.0))
    mixed = mixed_local(f, bracket, config)
    parabola = baseline_parabola_only(f, bracket, config)

    steps = [e.detail["step"] for e in mixed.trace.of_kind(PROPOSAL)]
    assert steps == ["parabola", "cubic", "parabola", "cubic"]
    assert mixed.n_evals == 3
    assert mixed.xmin == pytest.approx(1.0, abs=1e-9)
    assert parabola.n_evals > mixed.n_evals


def test_first_bracket_of_the_quadratic():
    entry = get_entry("quadratic")
    config = SolverConfig(domain=entry.domain)
    bracket = first_bracket(entry, config, entry.start)
    xs = [p.x for p in bracket.triplet]
    assert xs == pytest.approx([0.5, 1.809017, 2.618034], abs=1e-6)
    assert [p.y for p in bracket.triplet] == [entry(x) for x in xs]
    assert bracket.n_evals == 5


def test_first_bracket_of_a_monotone_function():
    config = SolverConfig(domain=DOMAIN)
    assert first_bracket(lambda x: -x, config, (0.0, 1.0)) is None


def test_baseline_counts_include_the_bracket(tmp_path):
    report = run_benchmark(
        functions=["quadratic"], methods=["golden"], output_dir=tmp_path
    )
    (cell,) = report.cells
    entry = get_entry("quadratic")
    config = SolverConfig(domain=entry.domain)
    bracket = first_bracket(entry, config, entry.start)
    golden = baseline_golden(entry, bracket.triplet, config.xtol)
    assert cell.n_evals == bracket.n_evals + golden.n_evals
    assert cell.success


@pytest.mark.parametrize(
    "functions, methods",
    [
        (["no-such-function"], METHODS),
        (["quadratic"], ["newton"]),
    ],
)
def test_run_benchmark_rejects_unknown_names(functions, methods):
    with pytest.raises(ValueError):
        run_benchmark(functions=functions, methods=methods)


def test_run_benchmark_writes_reports_and_traces(tmp_path):
    functions = ["quadratic", "double-well", "sine-sum"]
    first = run_benchmark(functions=functions, output_dir=tmp_path / "a")
    second = run_benchmark(functions=functions, output_dir=tmp_path / "b")
    assert first.model_dump() == second.model_dump()

    assert len(first.cells) == 9
    assert os.path.exists(tmp_path / "a" / "report.json")
    df = pd.read_csv(tmp_path / "a" / "report.csv")
    assert len(df) == 9
    for cell in first.cells:
        assert os.path.exists(tmp_path / "a" / cell.trace_file)

    with open(tmp_path / "a" / "report.json", encoding="utf-8") as f:
        saved = json.load(f)
    assert saved["functions"] == functions
    assert saved["methods"] == list(METHODS)


def test_full_benchmark():
    report = run_benchmark()
    assert len(report.cells) == 30
    assert [s.method for s in report.summaries] == list(METHODS)

    counted = [c for c in report.cells if c.error is None]
    for cell in counted:
        entry = get_entry(cell.function)
        assert abs(cell.ymin - entry(cell.xmin)) <= 1e-12 * (
            1.0 + abs(cell.ymin)
        )
        assert cell.ymin >= cell.f_star - 1e-9 * (1.0 + abs(cell.f_star))
    assert sum(s.total_evals for s in report.summaries) == sum(
        c.n_evals for c in counted
    )
    assert 0.0 <= report.mixed_vs_parabola_fraction <= 1.0
    for counts in report.local_evals.values():
        assert set(counts) == {"mixed", "parabola"}


def test_trace_jsonl_roundtrip(tmp_path):
    entry = get_entry("needle")
    trace = min_search_1d(entry, entry.start, domain=entry.domain).trace
    path = tmp_path / "traces" / "needle.jsonl"
    save_trace_jsonl(trace, path, function="needle", method="mixed")

    with open(path, encoding="utf-8") as f:
        head = json.loads(f.readline())
    assert head["function"] == "needle"
    loaded = load_trace_jsonl(path)
    assert loaded.model_dump(mode="json") == trace.model_dump(mode="json")


@pytest.mark.parametrize(
    "first_line",
    [
        {"record": "event", "seq": 0, "nff": 0, "kind": "evaluation"},
        {"record": "header", "schema_version": 99, "level": "full"},
    ],
)
def test_load_trace_rejects_other_files(tmp_path, first_line):
    path = tmp_path / "trace.jsonl"
    path.write_text(json.dumps(first_line) + "\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_trace_jsonl(path)


@pytest.mark.parametrize(
    "solver_config_path",
    ["solver-config-1.yml", "solver-config-2.yml"],
    indirect=True,
)
def test_load_solver_config(solver_config_path):
    settings = load_solver_config(solver_config_path)
    config = SolverConfig(domain=DOMAIN, **settings)
    assert config.domain == DOMAIN


@pytest.mark.parametrize(
    "solver_config_path", ["solver-config-bad.yml"], indirect=True
)
def test_load_solver_config_rejects_domain(solver_config_path):
    with pytest.raises(ValueError):
        load_solver_config(solver_config_path)


def test_export_plot_data(tmp_path):
    entry = get_entry("sine-sum")
    result = min_search_1d(entry, entry.start, domain=entry.domain)
    paths = export_plot_data(
        result.trace, tmp_path, fn=entry.fn, domain=entry.domain
    )
    assert set(paths) == {
        "evaluations",
        "snapshots",
        "interpolants",
        "function",
        "manifest",
    }

    evaluations = pd.read_csv(paths["evaluations"])
    assert list(evaluations["ordinal"]) == list(
        range(1, result.n_evals + 1)
    )

    snapshots = pd.read_csv(paths["snapshots"])
    assert snapshots["label"].nunique() == 1 + result.n_passes

    interpolants = pd.read_csv(paths["interpolants"])
    n_interpolations = len(result.trace.of_kind(INTERPOLATION))
    assert len(interpolants) == INTERPOLANT_SAMPLES * n_interpolations

    with open(paths["manifest"], encoding="utf-8") as f:
        manifest = json.load(f)
    assert manifest["files"]["function"] == "function.csv"


def test_export_without_function(tmp_path):
    trace = min_search_1d(quadratic, [0.5, 1.0], domain=DOMAIN).trace
    paths = export_plot_data(trace, tmp_path)
    assert "function" not in paths
    assert not os.path.exists(tmp_path / "function.csv")
