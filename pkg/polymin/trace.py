"""The event log of a run: evaluations, proposals, gates and polygonal
snapshots, in the order they happened."""
from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field

from .solver_config import TraceLevel

TRACE_SCHEMA_VERSION = 1

EVALUATION = "evaluation"
PROPOSAL = "proposal"
ADJUSTMENT = "adjustment"
TRIPLET_FOUND = "triplet-found"
RISE_CONFIRMED = "rise-confirmed"
SUBDIVISION = "subdivision"
BOUNDARY_INTERVAL = "boundary-interval"
SUSPECT = "suspect"
INTERPOLATION = "interpolation"
CANDIDATE = "candidate"
PASS_START = "pass-start"
PASS_END = "pass-end"
VALLEY_END = "valley-end"
BRACKET = "bracket"

# Kinds kept when the trace level is "evaluations".
_ESSENTIAL_KINDS = {EVALUATION, PASS_START, PASS_END}


class TraceEvent(BaseModel):
    seq: int
    nff: int
    kind: str
    x: Optional[float] = None
    y: Optional[float] = None
    detail: Dict[str, Any] = Field(default_factory=dict)


class SnapshotPoint(BaseModel):
    x: float
    y: float
    refined: bool


class PolygonalSnapshot(BaseModel):
    label: str
    nff: int
    pass_index: Optional[int] = None
    points: List[SnapshotPoint]


class Trace(BaseModel):
    schema_version: int = TRACE_SCHEMA_VERSION
    level: TraceLevel = TraceLevel.FULL
    events: List[TraceEvent] = Field(default_factory=list)
    snapshots: List[PolygonalSnapshot] = Field(default_factory=list)

    def record(
        self,
        kind: str,
        nff: int,
        x: Optional[float] = None,
        y: Optional[float] = None,
        **detail,
    ):
        """Append an event, unless the trace level filters it out.

        Args:
            kind (str): The event kind, e.g. ``"evaluation"``.
            nff (int): The evaluation count at the time of the event.
            x (float, optional): The abscissa the event refers to.
            y (float, optional): The ordinate the event refers to.
            **detail: Any other JSON-serialisable payload.
        """
        filtered = self.level == TraceLevel.EVALUATIONS
        if filtered and kind not in _ESSENTIAL_KINDS:
            return
        self.events.append(
            TraceEvent(
                seq=len(self.events),
                nff=nff,
                kind=kind,
                x=x,
                y=y,
                detail=detail,
            )
        )

    def snapshot(self, label: str, nff: int, poly, pass_index: int = None):
        """Store a copy of the polygonal's (x, y, refined) records."""
        self.snapshots.append(
            PolygonalSnapshot(
                label=label,
                nff=nff,
                pass_index=pass_index,
                points=[SnapshotPoint(**r) for r in poly.records()],
            )
        )

    def of_kind(self, *kinds: str) -> List[TraceEvent]:
        return [e for e in self.events if e.kind in kinds]

    def evaluations(self) -> List[TraceEvent]:
        return self.of_kind(EVALUATION)
