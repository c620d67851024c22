"""Utility functions."""
from .misc_utils import parse_list, validate_names
from .df_utils import cells_to_frame, summarise_methods
from .file_utils import (
    load_solver_config,
    load_trace_jsonl,
    save_json,
    save_trace_jsonl,
)
