"""Descent-number distributions on involutions and fixed-point-free involutions.

Exact integer computation of the triangles ``I_{n,k}`` and ``J_{n,k}`` and of
their gamma coefficients, by recurrence, by closed form and by enumeration.
"""

from .errors import (
    DivisibilityViolation,
    FeasibilityExceeded,
    IndexOutOfRange,
    NonSymmetricInput,
    OddIndex,
)
from .polyseq import DescentRow, Family, GammaFamily, GammaRow, gamma_expand, gamma_reconstruct
from .recurrences import a_row, b_row, i_row, j_row

__all__ = [
    "DescentRow",
    "DivisibilityViolation",
    "Family",
    "FeasibilityExceeded",
    "GammaFamily",
    "GammaRow",
    "IndexOutOfRange",
    "NonSymmetricInput",
    "OddIndex",
    "a_row",
    "b_row",
    "gamma_expand",
    "gamma_reconstruct",
    "i_row",
    "j_row",
]
