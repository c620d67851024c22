"""The command-line interface of polymin: ``polymin bench run|list|export``."""
import os
import typer
import pandas as pd
from typing_extensions import Annotated, Optional
from typer_config import use_yaml_config

from .logger import logger, set_verbosity
from .utils import (
    parse_list,
    validate_names,
    load_solver_config,
    load_trace_jsonl,
)
from .bench import (
    METHODS,
    BenchReport,
    export_plot_data,
    get_entry,
    list_entries,
    run_benchmark,
)

app = typer.Typer()
bench_app = typer.Typer(help="Benchmark the solver against the baselines.")
app.add_typer(bench_app, name="bench")


@app.callback()
def main(
    verbose: Annotated[
        bool,
        typer.Option(
            "--verbose",
            "-v",
            help="Log every exploration and refinement step.",
        ),
    ] = False,
):
    """Global minimum search of a function of one variable."""
    set_verbosity(verbose)


@bench_app.command("run")
@use_yaml_config()
def run_bench(
    functions: Annotated[
        Optional[str],
        typer.Option(
            help="Comma-separated corpus functions to run, for example "
            "'quadratic, needle'. All functions are run if not specified."
        ),
    ] = None,
    methods: Annotated[
        Optional[str],
        typer.Option(
            help="Comma-separated methods, any of 'mixed', 'parabola' and "
            "'golden'. All methods are run if not specified."
        ),
    ] = None,
    seed: Annotated[
        Optional[int],
        typer.Option(help="Seed of the random starting points."),
    ] = None,
    xtol: Annotated[
        Optional[float],
        typer.Option(help="Relative tolerance on the variable."),
    ] = None,
    ftol: Annotated[
        Optional[float],
        typer.Option(help="Relative tolerance on the function."),
    ] = None,
    bounds: Annotated[
        Optional[bool],
        typer.Option(
            "--bounds/--no-bounds",
            help="Whether to skip the refinement of unpromising valleys.",
        ),
    ] = None,
    sliding: Annotated[
        Optional[bool],
        typer.Option(
            "--sliding/--no-sliding",
            help="Whether to run the sliding cubic stage after the "
            "exploration.",
        ),
    ] = None,
    trace_level: Annotated[
        Optional[str],
        typer.Option(help="Trace verbosity: 'full' or 'evaluations'."),
    ] = None,
    solver_config_path: Annotated[
        Optional[str],
        typer.Option(
            help="If specified, a YAML file of solver settings (any "
            "SolverConfig field except 'domain'). Options given on the "
            "command line take precedence."
        ),
    ] = None,
    output_dir: Annotated[
        str,
        typer.Option(help="The folder to save the report and traces to."),
    ] = "bench-output",
) -> BenchReport:
    """Run the selected methods on the selected corpus functions.

    Prints the report table and the fraction of functions on which the mixed
    refinement used no more evaluations than the parabola-only one, and saves
    ``report.json``, ``report.csv`` and one trace per cell to ``output_dir``.

    Returns:
        BenchReport: The report.
    """
    try:
        function_names = parse_list(functions)
        validate_names(
            function_names, [e.name for e in list_entries()], "function"
        )
        method_names = parse_list(methods) or list(METHODS)
        validate_names(method_names, METHODS, "method")

        settings = {}
        if solver_config_path is not None:
            settings = load_solver_config(solver_config_path)
        overrides = {
            "rng_seed": seed,
            "xtol": xtol,
            "ftol": ftol,
            "sliding_cubic_stage": sliding,
            "trace_level": trace_level,
        }
        settings.update({k: v for k, v in overrides.items() if v is not None})
        if bounds is not None:
            settings["bounds"] = {
                **settings.get("bounds", {}),
                "enabled": bounds,
            }

        logger.info(
            f"Benchmarking {len(function_names) or 'all'} function(s) with "
            f"{', '.join(method_names)}"
        )
        report = run_benchmark(
            functions=list(dict.fromkeys(function_names)),
            methods=list(dict.fromkeys(method_names)),
            settings=settings,
            output_dir=output_dir,
        )
    except ValueError as e:
        logger.error(str(e))
        raise typer.Exit(code=2)

    df = pd.DataFrame(
        [c.model_dump(exclude={"trace_file"}) for c in report.cells]
    )
    typer.echo(df.to_string(index=False))
    if report.mixed_vs_parabola_fraction is not None:
        typer.echo(
            "Mixed refinement used no more evaluations than parabola-only "
            f"on {report.mixed_vs_parabola_fraction:.0%} of "
            f"{len(report.local_evals)} function(s)."
        )
    return report


@bench_app.command("list")
def list_functions():
    """List the corpus functions with their oracle minimum."""
    rows = []
    for entry in list_entries():
        oracle = entry.oracle
        rows.append(
            {
                "name": entry.name,
                "xinf": entry.domain.xinf,
                "xsup": entry.domain.xsup,
                "local_minima": oracle.n_local_minima,
                "x_star": oracle.x,
                "f_star": oracle.y,
                "description": entry.description,
            }
        )
    df = pd.DataFrame(rows)
    typer.echo(df.to_string(index=False))
    return df


@bench_app.command("export")
def export(
    trace_path: Annotated[
        str, typer.Argument(help="The trace file (.jsonl) to export.")
    ],
    output_dir: Annotated[
        str, typer.Argument(help="The folder to save the CSV files to.")
    ],
    function: Annotated[
        Optional[str],
        typer.Option(
            help="If specified, the corpus function to sample densely "
            "alongside the trace."
        ),
    ] = None,
):
    """Export the plot data of a trace saved by ``bench run``.

    Args:
        trace_path (str): The trace file.
        output_dir (str): The folder to write to.
        function (str, optional): Corpus function to sample densely.

    Returns:
        dict: File kind -> path.
    """
    try:
        if not os.path.exists(trace_path):
            raise ValueError(f"The trace file '{trace_path}' does not exist.")
        trace = load_trace_jsonl(trace_path)
        entry = get_entry(function) if function else None
    except ValueError as e:
        logger.error(str(e))
        raise typer.Exit(code=2)

    return export_plot_data(
        trace,
        output_dir,
        fn=entry.fn if entry else None,
        domain=entry.domain if entry else None,
    )


if __name__ == "__main__":
    app()  # pragma: no cover
