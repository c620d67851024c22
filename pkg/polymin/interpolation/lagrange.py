"""Minima of the Lagrange parabola through three points and of the Lagrange
cubic through four points."""
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..exceptions import DegenerateCubicError

PARABOLA = "parabola"
CUBIC = "cubic"

# |A_| below this (relative to max(1, |B_|)) means the cubic is a parabola.
DEGENERACY_THRESHOLD = 1e-12
# QQ below this fraction of the derivative's scale is treated as a double
# root: samples of x**3 leave QQ at roundoff level instead of 0, and the
# inflection point must not come out as a minimum.
DOUBLE_ROOT_THRESHOLD = 1e-12


@dataclass(frozen=True)
class InterpMin:
    """Minimum of an interpolant. ``y_predicted`` is the interpolant's value,
    not a function evaluation."""

    x: float
    y_predicted: float
    kind: str


def _check_distinct(xs: Sequence[float]):
    if len(set(xs)) != len(xs):
        raise ValueError(f"Interpolation nodes must be distinct, got {xs}.")


def parabola_min(p1, p2, p3) -> Optional[InterpMin]:
    """Compute the minimum of the parabola passing through p1, p2, p3.

    Args:
        p1 (EvalPoint): First node.
        p2 (EvalPoint): Second node.
        p3 (EvalPoint): Third node.

    Returns:
        InterpMin: The vertex, or None if the parabola is concave or flat.

    Raises:
        ValueError: If two abscissas coincide.
    """
    xa, fa = p1.x, p1.y
    xb, fb = p2.x, p2.y
    xc, fc = p3.x, p3.y
    _check_distinct((xa, xb, xc))

    a = fa / (xa - xb) / (xa - xc)
    b = fb / (xb - xa) / (xb - xc)
    c = fc / (xc - xa) / (xc - xb)
    s = a + b + c
    if not s > 0.0:
        return None

    x = (a * (xb + xc) + b * (xa + xc) + c * (xa + xb)) / 2.0 / s
    y = (
        a * (x - xb) * (x - xc)
        + b * (x - xa) * (x - xc)
        + c * (x - xa) * (x - xb)
    )
    return InterpMin(x=x, y_predicted=y, kind=PARABOLA)


def cubic_min(p1, p2, p3, p4) -> Optional[InterpMin]:
    """Compute the minimum of the cubic passing through p1, p2, p3, p4.

    The derivative of the cubic is ``A_ x^2 - 2 B_ x + C_``; when its
    discriminant ``QQ = B_^2 - A_ C_`` is positive the root at which the
    second derivative ``A_ x - B_`` is positive is returned.

    Args:
        p1 (EvalPoint): First node (smallest abscissa).
        p2 (EvalPoint): Second node.
        p3 (EvalPoint): Third node.
        p4 (EvalPoint): Fourth node (largest abscissa).

    Returns:
        InterpMin: The local minimum, or None if the cubic has none.

    Raises:
        ValueError: If two abscissas coincide.
        DegenerateCubicError: If the data is effectively parabolic.
    """
    xa, fa = p1.x, p1.y
    xb, fb = p2.x, p2.y
    xc, fc = p3.x, p3.y
    xd, fd = p4.x, p4.y
    _check_distinct((xa, xb, xc, xd))

    aa = fa / (xa - xb) / (xa - xc) / (xa - xd)
    bb = fb / (xb - xa) / (xb - xc) / (xb - xd)
    cc = fc / (xc - xa) / (xc - xb) / (xc - xd)
    dd = fd / (xd - xa) / (xd - xb) / (xd - xc)

    a_ = 3.0 * (aa + bb + cc + dd)
    b_ = (
        aa * (xb + xc + xd)
        + bb * (xa + xc + xd)
        + cc * (xa + xb + xd)
        + dd * (xa + xb + xc)
    )
    c_ = (
        aa * (xb * xc + xb * xd + xc * xd)
        + bb * (xa * xc + xa * xd + xc * xd)
        + cc * (xa * xb + xa * xd + xb * xd)
        + dd * (xa * xb + xa * xc + xb * xc)
    )
    if abs(a_) <= DEGENERACY_THRESHOLD * max(1.0, abs(b_)):
        raise DegenerateCubicError(
            f"Leading coefficient {a_} is negligible, the data is parabolic."
        )

    qq = b_ * b_ - a_ * c_
    span = max(xa, xb, xc, xd) - min(xa, xb, xc, xd)
    scale = b_ * b_ + abs(a_ * c_) + (a_ * span) ** 2
    if not qq > DOUBLE_ROOT_THRESHOLD * scale:
        return None

    # q = b_ + sign(b_) sqrt(QQ) avoids cancelling when A_ is small
    q = b_ + math.copysign(math.sqrt(qq), b_)
    u31 = q / a_
    u32 = c_ / q
    x = u31 if a_ * u31 - b_ > 0.0 else u32
    y = (
        aa * (x - xb) * (x - xc) * (x - xd)
        + bb * (x - xa) * (x - xc) * (x - xd)
        + cc * (x - xa) * (x - xb) * (x - xd)
        + dd * (x - xa) * (x - xb) * (x - xc)
    )
    return InterpMin(x=x, y_predicted=y, kind=CUBIC)


def cubic_min_or_parabola(points) -> Optional[InterpMin]:
    """Cubic minimum through four sorted points, falling back to the parabola
    when the cubic is degenerate.

    The fallback parabola drops whichever end point has the higher ordinate.
    """
    try:
        return cubic_min(*points)
    except DegenerateCubicError:
        p1, p2, p3, p4 = points
        if p1.y > p4.y:
            return parabola_min(p2, p3, p4)
        return parabola_min(p1, p2, p3)


def lagrange_values(nodes_x, nodes_y, xs) -> np.ndarray:
    """Evaluate the Lagrange interpolant through the given nodes.

    Args:
        nodes_x (array-like): Distinct node abscissas.
        nodes_y (array-like): Node ordinates.
        xs (array-like): Abscissas at which to evaluate.

    Returns:
        np.ndarray: Interpolant values at xs.
    """
    nodes_x = np.asarray(nodes_x, dtype=float)
    nodes_y = np.asarray(nodes_y, dtype=float)
    xs = np.asarray(xs, dtype=float)
    _check_distinct(tuple(nodes_x))
    out = np.zeros_like(xs)
    for i, (xi, yi) in enumerate(zip(nodes_x, nodes_y)):
        basis = np.full_like(xs, yi)
        for j, xj in enumerate(nodes_x):
            if j != i:
                basis *= (xs - xj) / (xi - xj)
        out += basis
    return out
