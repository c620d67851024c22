"""Utility functions for building the benchmark report DataFrames."""
from typing import List

import pandas as pd

from polymin.logger import logger

CELL_COLUMNS = [
    "function",
    "method",
    "n_evals",
    "xmin",
    "ymin",
    "x_star",
    "f_star",
    "abs_error",
    "success",
    "termination",
    "error",
]


def cells_to_frame(cells: List[dict]) -> pd.DataFrame:
    """Build the per (function, method) table.

    Args:
        cells (list[dict]): One record per benchmark cell.

    Returns:
        pd.DataFrame: The table, with the columns in ``CELL_COLUMNS`` order.
    """
    df = pd.DataFrame.from_records(cells, columns=CELL_COLUMNS)
    failed = df["error"].notna().sum()
    if failed:
        logger.warning(f"{failed} benchmark cell(s) failed.")
    return df


def summarise_methods(df: pd.DataFrame) -> pd.DataFrame:
    """Aggregate the cell table per method.

    Failed cells count in ``failures`` only; their evaluations are still
    added to ``total_evals``.

    Args:
        df (pd.DataFrame): The table built by :func:`cells_to_frame`.

    Returns:
        pd.DataFrame: One row per method, in order of first appearance.
    """
    grouped = df.groupby("method", sort=False)
    summary = pd.DataFrame(
        {
            "total_evals": grouped["n_evals"].sum(),
            "mean_evals": grouped["n_evals"].mean(),
            "successes": grouped["success"].sum(),
            "failures": grouped["error"].count(),
        }
    ).reset_index()
    return summary
