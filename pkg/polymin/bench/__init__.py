"""Benchmark harness: test-function corpus, baseline minimizers, reports
and plot-data export."""
from .corpus import (
    CorpusEntry,
    OracleMinimum,
    dense_grid_oracle,
    get_entry,
    list_entries,
    register,
)
from .baselines import (
    BaselineResult,
    baseline_golden,
    baseline_parabola_only,
    mixed_local,
)
from .harness import (
    METHODS,
    BenchReport,
    first_bracket,
    run_benchmark,
)
from .export import export_plot_data
