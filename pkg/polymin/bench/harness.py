"""Head-to-head runs of the solver and the baselines over the corpus."""
import os
from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel

from ..bracketing import explore
from ..evaluation import EvalContext, SearchState
from ..logger import logger
from ..polygonal import EvalPoint
from ..refinement import initial_gate
from ..solver import ConstantFunction, acquire_initial_points, min_search_1d
from ..solver_config import SolverConfig, TraceLevel
from ..trace import TRACE_SCHEMA_VERSION, TRIPLET_FOUND, Trace
from ..utils import (
    cells_to_frame,
    save_json,
    save_trace_jsonl,
    summarise_methods,
)
from .baselines import baseline_golden, baseline_parabola_only, mixed_local
from .corpus import CorpusEntry, get_entry, list_entries

MIXED = "mixed"
PARABOLA = "parabola"
GOLDEN = "golden"
METHODS = (MIXED, PARABOLA, GOLDEN)


class BracketFound(BaseModel):
    """The first bracketing triplet met by the exploration and the number of
    evaluations spent reaching it."""

    triplet: List[EvalPoint]
    n_evals: int


class BenchCell(BaseModel):
    function: str
    method: str
    n_evals: Optional[int] = None
    xmin: Optional[float] = None
    ymin: Optional[float] = None
    x_star: float
    f_star: float
    abs_error: Optional[float] = None
    success: bool = False
    termination: Optional[str] = None
    error: Optional[str] = None
    trace_file: Optional[str] = None


class MethodSummary(BaseModel):
    method: str
    total_evals: int
    mean_evals: float
    successes: int
    failures: int


class BenchReport(BaseModel):
    schema_version: int = TRACE_SCHEMA_VERSION
    seed: int
    functions: List[str]
    methods: List[str]
    cells: List[BenchCell]
    summaries: List[MethodSummary]
    # Refinement-only evaluations on each function's first bracket.
    local_evals: Dict[str, Dict[str, int]]
    mixed_vs_parabola_fraction: Optional[float] = None


def solver_config_for(entry: CorpusEntry, settings: dict) -> SolverConfig:
    """Build the configuration of a run on ``entry`` from the shared
    settings (everything but the domain)."""
    return SolverConfig(domain=entry.domain, **settings)


def first_bracket(
    objective, config: SolverConfig, given: Sequence = ()
) -> Optional[BracketFound]:
    """Run the initial point acquisition and the exploration only, and
    return the first bracketing triplet found.

    The starting points and random generator are those of a full solver run
    with the same configuration, so the baselines start where the solver's
    refinement would.

    Returns:
        BracketFound: The triplet, or None if the exploration found none
           (monotone or constant function, or gated out).
    """
    config = config.model_copy(update={"trace_level": TraceLevel.FULL})
    trace = Trace(level=TraceLevel.FULL)
    ctx = EvalContext(objective, config.domain, trace, config.max_evals)
    acquired = acquire_initial_points(
        ctx,
        config.domain,
        given,
        np.random.default_rng(config.rng_seed),
        config.max_initial_trials,
        config.xtol,
    )
    if isinstance(acquired, ConstantFunction):
        return None
    bounds = config.bounds.resolve(acquired.fb, config.domain, config.ftol)
    if not initial_gate(
        acquired.xa, acquired.xb, acquired.fa, acquired.fb, bounds
    ):
        return None
    state = SearchState(ctx, config, bounds, acquired.xb, acquired.fb)
    state.insert(acquired.xa, acquired.fa)
    state.insert(acquired.xb, acquired.fb)
    explore(state, acquired.xa, acquired.xb, acquired.fa, acquired.fb)

    found = trace.of_kind(TRIPLET_FOUND)
    if not found:
        return None
    event = found[0]
    ordinates = {p.x: p.y for p in state.poly}
    xs = sorted((event.detail["xa"], event.x, event.detail["xc"]))
    # nff at the event: evaluations up to and including xc
    return BracketFound(
        triplet=[EvalPoint(x, ordinates[x]) for x in xs],
        n_evals=event.nff,
    )


def _cell(entry: CorpusEntry, method: str) -> BenchCell:
    oracle = entry.oracle
    return BenchCell(
        function=entry.name,
        method=method,
        x_star=oracle.x,
        f_star=oracle.y,
    )


def _finish(cell: BenchCell, n_evals, xmin, ymin, ftol, xtol):
    cell.n_evals = n_evals
    cell.xmin = xmin
    cell.ymin = ymin
    cell.abs_error = abs(ymin - cell.f_star)
    cell.success = bool(
        ymin <= cell.f_star + ftol * (1.0 + abs(cell.f_star))
        or abs(xmin - cell.x_star) <= xtol * (1.0 + abs(cell.x_star))
    )


def run_benchmark(
    functions: Sequence[str] = None,
    methods: Sequence[str] = METHODS,
    settings: dict = None,
    output_dir: str = None,
) -> BenchReport:
    """Run each method on each corpus function.

    Every cell starts from the same points: the solver ("mixed") from the
    entry's starting pair or the seeded generator, the baselines from the
    first bracketing triplet the solver's exploration meets. Baseline
    evaluation counts include the evaluations spent finding that triplet.
    A failing cell is recorded with its error and does not stop the run.

    Args:
        functions (list[str], optional): Corpus names; all when omitted.
        methods (list[str]): Any of "mixed", "parabola", "golden".
        settings (dict, optional): ``SolverConfig`` fields but ``domain``.
        output_dir (str, optional): If given, ``report.json``, ``report.csv``
           and one ``traces/<function>__<method>.jsonl`` per cell are written
           there.

    Returns:
        BenchReport: Cells, per-method summaries and the fraction of
           functions on which the mixed refinement needed no more
           evaluations than the parabola-only one.
    """
    settings = dict(settings or {})
    entries = (
        [get_entry(n) for n in functions] if functions else list_entries()
    )
    if not entries:
        raise ValueError("No corpus function selected.")
    unknown = [m for m in methods if m not in METHODS]
    if unknown:
        raise ValueError(
            f"Unknown method(s) {', '.join(unknown)}, choose from "
            f"{', '.join(METHODS)}."
        )

    cells: List[BenchCell] = []
    local_evals: Dict[str, Dict[str, int]] = {}
    for entry in entries:
        config = solver_config_for(entry, settings)
        given = entry.start or ()
        bracket = None
        if PARABOLA in methods or GOLDEN in methods:
            try:
                bracket = first_bracket(entry, config, given)
            except Exception as e:
                logger.warning(f"No bracket for '{entry.name}': {e}")

        for method in methods:
            logger.info(f"Running '{entry.name}' with method '{method}'...")
            cell = _cell(entry, method)
            try:
                trace = _run_cell(entry, method, config, given, bracket, cell)
            except Exception as e:  # recorded, the run goes on
                logger.warning(f"'{entry.name}' / '{method}' failed: {e}")
                cell.error = f"{type(e).__name__}: {e}"
                trace = getattr(e, "trace", None)
            if output_dir is not None and trace is not None:
                cell.trace_file = os.path.join(
                    "traces", f"{entry.name}__{method}.jsonl"
                )
                save_trace_jsonl(
                    trace,
                    os.path.join(output_dir, cell.trace_file),
                    function=entry.name,
                    method=method,
                )
            cells.append(cell)

        if bracket is not None:
            try:
                local_evals[entry.name] = {
                    MIXED: mixed_local(entry, bracket.triplet, config).n_evals,
                    PARABOLA: baseline_parabola_only(
                        entry, bracket.triplet, config
                    ).n_evals,
                }
            except Exception as e:
                logger.warning(
                    f"Local refinement of '{entry.name}' failed: {e}"
                )

    fraction = None
    if local_evals:
        wins = sum(
            counts[MIXED] <= counts[PARABOLA]
            for counts in local_evals.values()
        )
        fraction = wins / len(local_evals)

    df = cells_to_frame([c.model_dump() for c in cells])
    summaries = [
        MethodSummary(**row)
        for row in summarise_methods(df).to_dict(orient="records")
    ]
    report = BenchReport(
        seed=settings.get("rng_seed", 0),
        functions=[e.name for e in entries],
        methods=list(methods),
        cells=cells,
        summaries=summaries,
        local_evals=local_evals,
        mixed_vs_parabola_fraction=fraction,
    )
    if output_dir is not None:
        save_json(
            report.model_dump(mode="json"),
            os.path.join(output_dir, "report.json"),
        )
        df.to_csv(os.path.join(output_dir, "report.csv"), index=False)
    return report


def _run_cell(
    entry: CorpusEntry,
    method: str,
    config: SolverConfig,
    given,
    bracket: Optional[BracketFound],
    cell: BenchCell,
) -> Trace:
    if method == MIXED:
        result = min_search_1d(entry, given, config)
        _finish(
            cell,
            result.n_evals,
            result.xmin,
            result.ymin,
            config.ftol,
            config.xtol,
        )
        cell.termination = result.termination.value
        return result.trace

    if bracket is None:
        raise ValueError("the exploration found no bracketing triplet")
    if method == PARABOLA:
        result = baseline_parabola_only(entry, bracket.triplet, config)
    else:
        result = baseline_golden(entry, bracket.triplet, config.xtol)
    _finish(
        cell,
        bracket.n_evals + result.n_evals,
        result.xmin,
        result.ymin,
        config.ftol,
        config.xtol,
    )
    return result.trace
