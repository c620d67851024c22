"""Interpolation kernels: parabola and cubic minima, golden subdivision."""
from .golden import GOLD, CGOLD, MIN_RATIO, golden_subdivide
from .lagrange import (
    CUBIC,
    PARABOLA,
    InterpMin,
    cubic_min,
    cubic_min_or_parabola,
    lagrange_values,
    parabola_min,
)
from .sliding import sliding_cubic_suspects
