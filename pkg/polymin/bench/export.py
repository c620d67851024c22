"""Plot-ready CSV files built from a trace."""
import os
from typing import Callable, Dict, Optional

import numpy as np
import pandas as pd

from ..interpolation import lagrange_values
from ..logger import logger
from ..solver_config import Domain
from ..trace import INTERPOLATION, Trace
from ..utils import save_json

INTERPOLANT_SAMPLES = 200
FUNCTION_SAMPLES = 2000


def evaluations_frame(trace: Trace) -> pd.DataFrame:
    """Evaluated points in the order they were computed."""
    return pd.DataFrame.from_records(
        [
            {"ordinal": e.nff, "x": e.x, "y": e.y}
            for e in trace.evaluations()
        ],
        columns=["ordinal", "x", "y"],
    )


def snapshots_frame(trace: Trace) -> pd.DataFrame:
    """Every polygonal snapshot, one row per vertex."""
    return pd.DataFrame.from_records(
        [
            {
                "label": s.label,
                "pass_index": s.pass_index,
                "nff": s.nff,
                "x": p.x,
                "y": p.y,
                "refined": p.refined,
            }
            for s in trace.snapshots
            for p in s.points
        ],
        columns=["label", "pass_index", "nff", "x", "y", "refined"],
    )


def interpolants_frame(
    trace: Trace, n_samples: int = INTERPOLANT_SAMPLES
) -> pd.DataFrame:
    """Sample each recorded interpolant over the span of its nodes.

    Args:
        trace (Trace): A trace recorded at level "full".
        n_samples (int): Rows per interpolation.

    Returns:
        pd.DataFrame: ``n_samples`` rows per interpolation event.
    """
    frames = []
    for i, e in enumerate(trace.of_kind(INTERPOLATION)):
        nodes = np.asarray(e.detail["nodes"], dtype=float)
        xs = np.linspace(nodes[:, 0].min(), nodes[:, 0].max(), n_samples)
        frames.append(
            pd.DataFrame(
                {
                    "interpolation": i,
                    "seq": e.seq,
                    "method": e.detail["method"],
                    "x": xs,
                    "y": lagrange_values(nodes[:, 0], nodes[:, 1], xs),
                }
            )
        )
    if not frames:
        return pd.DataFrame(
            columns=["interpolation", "seq", "method", "x", "y"]
        )
    return pd.concat(frames, ignore_index=True)


def function_frame(
    fn: Callable[[np.ndarray], np.ndarray],
    domain: Domain,
    n_samples: int = FUNCTION_SAMPLES,
) -> pd.DataFrame:
    xs = np.linspace(domain.xinf, domain.xsup, n_samples)
    return pd.DataFrame({"x": xs, "y": fn(xs)})


def export_plot_data(
    trace: Trace,
    output_dir: str,
    fn: Optional[Callable[[np.ndarray], np.ndarray]] = None,
    domain: Optional[Domain] = None,
) -> Dict[str, str]:
    """Write the columnar files needed to plot a run.

    ``evaluations.csv``, ``snapshots.csv`` and ``interpolants.csv`` are
    always written; ``function.csv`` (dense samples of the objective) only
    when ``fn`` and ``domain`` are given. ``manifest.json`` records the
    trace schema version and the file names.

    Args:
        trace (Trace): The trace of a run.
        output_dir (str): The folder to write to.
        fn (callable, optional): Vectorised objective.
        domain (Domain, optional): Interval over which to sample ``fn``.

    Returns:
        dict: File kind -> path.
    """
    os.makedirs(output_dir, exist_ok=True)
    frames = {
        "evaluations": evaluations_frame(trace),
        "snapshots": snapshots_frame(trace),
        "interpolants": interpolants_frame(trace),
    }
    if fn is not None and domain is not None:
        frames["function"] = function_frame(fn, domain)

    paths = {}
    for kind, df in frames.items():
        paths[kind] = os.path.join(output_dir, f"{kind}.csv")
        df.to_csv(paths[kind], index=False)
        logger.info(f"Saved {len(df)} rows to {paths[kind]}.")

    paths["manifest"] = os.path.join(output_dir, "manifest.json")
    save_json(
        {
            "schema_version": trace.schema_version,
            "files": {k: os.path.basename(v) for k, v in paths.items()},
        },
        paths["manifest"],
    )
    return paths
