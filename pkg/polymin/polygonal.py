"""The polygonal of known values: every evaluated point of the function,
kept in increasing order of abscissa."""
from dataclasses import dataclass
from typing import Callable, Iterator, List, NamedTuple, Optional, Tuple


@dataclass
class EvalPoint:
    x: float
    y: float
    refined: bool = False


class Triplet(NamedTuple):
    p1: EvalPoint
    p2: EvalPoint
    p3: EvalPoint


@dataclass(frozen=True)
class InsertOutcome:
    """Result of :meth:`Polygonal.insert_point`.

    ``point`` is the new point when ``added`` is True, otherwise the existing
    point that the abscissa collided with. ``index`` is its position.
    """

    point: EvalPoint
    index: int
    added: bool

    @property
    def duplicate(self) -> bool:
        return not self.added


def almost_equal_rel(a: float, b: float, eps: float) -> bool:
    """Check if two numbers are almost equal in relative terms.

    The tolerance is scaled by ``|a|`` only, so the relation is not
    symmetric.

    Args:
        a (float): The reference number.
        b (float): The number to compare.
        eps (float): The relative tolerance, > 0.

    Returns:
        bool: True if ``|a - b| < eps * (1 + |a|)``.
    """
    return abs(a - b) < eps * (1.0 + abs(a))


class Polygonal:
    """Strictly increasing sequence of :class:`EvalPoint`.

    No two abscissas are almost equal under ``xtol``.

    Args:
        xtol (float): Relative tolerance used to detect duplicate abscissas.
        points (list[EvalPoint], optional): Initial points, already sorted
           and distinct.
    """

    def __init__(self, xtol: float, points: Optional[List[EvalPoint]] = None):
        if xtol <= 0:
            raise ValueError("xtol must be positive.")
        self.xtol = xtol
        self.points: List[EvalPoint] = list(points) if points else []

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[EvalPoint]:
        return iter(self.points)

    def __getitem__(self, i: int) -> EvalPoint:
        return self.points[i]

    def copy(self) -> "Polygonal":
        """Return an independent copy (points are copied too)."""
        return Polygonal(
            self.xtol, [EvalPoint(p.x, p.y, p.refined) for p in self.points]
        )

    def insert_point(
        self,
        x: float,
        y: Optional[float] = None,
        refined: bool = False,
        evaluate: Optional[Callable[[float], float]] = None,
    ) -> InsertOutcome:
        """Add a point to the polygonal unless its abscissa is already known.

        This is the only place the objective is called during a run: when
        ``y`` is None the evaluator is invoked exactly once at ``x``.

        Args:
            x (float): The abscissa.
            y (float, optional): The ordinate, if already known.
            refined (bool): The initial value of the refined flag.
            evaluate (callable, optional): Evaluator used when ``y`` is None.

        Returns:
            InsertOutcome: Added (with the new point and its position) or
               duplicate (with the existing point), in which case nothing was
               evaluated.
        """
        index = len(self.points)
        for i, p in enumerate(self.points):
            if almost_equal_rel(x, p.x, self.xtol):
                return InsertOutcome(point=p, index=i, added=False)
            if p.x > x:
                index = i
                break
        if y is None:
            if evaluate is None:
                raise ValueError(
                    f"No ordinate and no evaluator given for x={x}."
                )
            y = evaluate(x)
        point = EvalPoint(x, y, refined)
        self.points.insert(index, point)
        return InsertOutcome(point=point, index=index, added=True)

    def index_of(self, x: float) -> int:
        """Return the position of the first point with abscissa >= x."""
        for i, p in enumerate(self.points):
            if p.x >= x:
                return i
        return len(self.points)

    def triplet_at(self, i: int) -> Optional[Triplet]:
        """Return the triplet centred on position i, or None at either end."""
        if i <= 0 or i >= len(self.points) - 1:
            return None
        return Triplet(*self.points[i - 1 : i + 2])

    def ordinate_range(self) -> Tuple[float, float]:
        """Return the minimum and maximum ordinates (fPmin, fPmax)."""
        if not self.points:
            raise ValueError("The polygonal is empty.")
        ys = [p.y for p in self.points]
        return min(ys), max(ys)

    def best(self) -> EvalPoint:
        """Return the leftmost point with the least ordinate."""
        return min(self.points, key=lambda p: p.y)

    def scan_valleys(self) -> Iterator[Triplet]:
        """Yield, left to right, each consecutive triplet whose centre is a
        valley: the slope changes sign, ``(p2.y - p1.y) * (p3.y - p2.y) <=
        0``, and the centre is not above both neighbours."""
        for i in range(1, len(self.points) - 1):
            p1, p2, p3 = self.points[i - 1 : i + 2]
            if (p2.y - p1.y) * (p3.y - p2.y) <= 0.0 and p2.y <= max(
                p1.y, p3.y
            ):
                yield Triplet(p1, p2, p3)

    def records(self) -> List[dict]:
        return [
            {"x": p.x, "y": p.y, "refined": p.refined} for p in self.points
        ]
