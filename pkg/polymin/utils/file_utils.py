"""Functions for saving and loading files."""
import json
from pathlib import Path
from typing import Any, Dict

import yaml

from polymin.logger import logger
from polymin.trace import (
    TRACE_SCHEMA_VERSION,
    PolygonalSnapshot,
    SnapshotPoint,
    Trace,
    TraceEvent,
)

HEADER = "header"
EVENT = "event"
SNAPSHOT = "snapshot"


def load_solver_config(config_path: str) -> Dict[str, Any]:
    """Load solver settings from a YAML file.

    The file may hold any ``SolverConfig`` field except ``domain``, which
    comes from the function being minimised.

    Args:
        config_path (str): The path of the YAML file.

    Returns:
        dict: The settings, ready to be passed to ``SolverConfig``.
    """
    with open(config_path, "r", encoding="utf-8") as f:
        try:
            content = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError(e) from e
    content = content or {}
    if not isinstance(content, dict):
        raise ValueError(
            f"The solver config '{config_path}' must be a mapping of "
            "settings."
        )
    if "domain" in content:
        raise ValueError(
            "The solver config cannot set 'domain', it is taken from the "
            "function being minimised."
        )
    return content


def save_trace_jsonl(trace: Trace, output_path: str, **header):
    """Save a trace as JSON lines.

    The first line is a header carrying the schema version, the trace level
    and any extra ``header`` fields. It is followed by one line per event
    (``seq, nff, kind, x, y, detail``) and one line per polygonal snapshot,
    whose points are ``[x, y, refined]`` arrays.

    Args:
        trace (Trace): The trace to save.
        output_path (str): The path to save it to.
    """
    Path(output_path).parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", encoding="utf-8") as f:
        head = {
            "record": HEADER,
            "schema_version": trace.schema_version,
            "level": trace.level.value,
            **header,
        }
        f.write(json.dumps(head) + "\n")
        for e in trace.events:
            f.write(json.dumps({"record": EVENT, **e.model_dump()}) + "\n")
        for s in trace.snapshots:
            record = {
                "record": SNAPSHOT,
                "label": s.label,
                "nff": s.nff,
                "pass_index": s.pass_index,
                "points": [[p.x, p.y, p.refined] for p in s.points],
            }
            f.write(json.dumps(record) + "\n")
    logger.debug(f"Saved trace to {output_path}.")


def load_trace_jsonl(path: str) -> Trace:
    """Load a trace saved by :func:`save_trace_jsonl`.

    Raises:
        ValueError: If the file has no header or a different schema version.
    """
    with open(path, "r", encoding="utf-8") as f:
        lines = [json.loads(line) for line in f if line.strip()]
    if not lines or lines[0].get("record") != HEADER:
        raise ValueError(f"'{path}' is not a trace file (no header line).")
    head = lines[0]
    if head.get("schema_version") != TRACE_SCHEMA_VERSION:
        raise ValueError(
            f"'{path}' has trace schema version "
            f"{head.get('schema_version')}, expected {TRACE_SCHEMA_VERSION}."
        )

    trace = Trace(level=head["level"])
    for line in lines[1:]:
        record = line.pop("record")
        if record == EVENT:
            trace.events.append(TraceEvent(**line))
        elif record == SNAPSHOT:
            points = [
                SnapshotPoint(x=x, y=y, refined=r)
                for x, y, r in line["points"]
            ]
            trace.snapshots.append(
                PolygonalSnapshot(
                    label=line["label"],
                    nff=line["nff"],
                    pass_index=line["pass_index"],
                    points=points,
                )
            )
    return trace


def save_json(data: Any, output_path: str):
    """Save JSON-serialisable data, creating the parent folder if needed."""
    Path(output_path).parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2)
    logger.info(f"Saved output to {output_path}.")
