"""Exact coefficient rows and the structural predicates used throughout.

A *descent row* holds the coefficients of ``I_n(t)`` (involutions) or
``J_n(t)`` (fixed-point-free involutions) as a dense tuple of Python ints,
so index ``k`` is always the coefficient of ``t**k``.  A *gamma row* holds
the coefficients of the expansion in the basis ``t**k * (1+t)**(d-2k)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence, Union

from .errors import NonSymmetricInput, OddIndex

# Python ints are already arbitrary precision; the alias documents intent.
BigCoeff = int


class Family(enum.Enum):
    INVOLUTION = "I"
    FIXED_POINT_FREE = "J"


class GammaFamily(enum.Enum):
    A = "a"  # expansion of I_n(t)
    B = "b"  # expansion of J_n(t), n even


@dataclass(frozen=True)
class DescentRow:
    family: Family
    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.n < 1:
            raise ValueError(f"row index must be positive, got {self.n}")
        if len(self.coeffs) != self.n:
            raise ValueError(
                f"row {self.family.value}_{self.n} needs {self.n} coefficients, "
                f"got {len(self.coeffs)}"
            )
        if any(c < 0 for c in self.coeffs):
            raise ValueError(f"negative coefficient in {self.family.value}_{self.n}")
        if self.family is Family.INVOLUTION:
            if self.coeffs[0] != 1:
                raise ValueError(f"I_{self.n} must have constant term 1")
        else:
            if self.coeffs[0] != 0:
                raise ValueError(f"J_{self.n} must have constant term 0")
            if self.n % 2 and any(self.coeffs):
                raise ValueError(f"J_{self.n} must vanish for odd n")

    def __getitem__(self, k: int) -> int:
        """Coefficient of ``t**k``; zero outside ``0..n-1``."""
        if 0 <= k < self.n:
            return self.coeffs[k]
        return 0

    def __len__(self):
        return self.n

    def total(self) -> int:
        return sum(self.coeffs)

    @property
    def label(self) -> str:
        return f"{self.family.value}_{self.n}"


@dataclass(frozen=True)
class GammaRow:
    family: GammaFamily
    n: int
    gammas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(int(g) for g in self.gammas))
        if self.n < 1:
            raise ValueError(f"row index must be positive, got {self.n}")
        if self.family is GammaFamily.B and self.n % 2:
            raise OddIndex(f"b-row index must be even, got {self.n}")
        expected = self.k_max - self.k_min + 1
        if len(self.gammas) != expected:
            raise ValueError(
                f"{self.family.value}_{self.n} needs {expected} entries, "
                f"got {len(self.gammas)}"
            )

    @property
    def k_min(self) -> int:
        return 0 if self.family is GammaFamily.A else 1

    @property
    def k_max(self) -> int:
        return (self.n - 1) // 2 if self.family is GammaFamily.A else self.n // 2

    @property
    def degree(self) -> int:
        """The ``d`` in the basis ``t**k (1+t)**(d-2k)``."""
        return self.n - 1 if self.family is GammaFamily.A else self.n

    def __getitem__(self, k: int) -> int:
        if self.k_min <= k <= self.k_max:
            return self.gammas[k - self.k_min]
        return 0

    def items(self) -> Iterable[tuple[int, int]]:
        return zip(range(self.k_min, self.k_max + 1), self.gammas)

    @property
    def label(self) -> str:
        return f"{self.family.value}_{self.n}"


Coeffs = Union[DescentRow, Sequence[int]]


def _search_range(row: Coeffs) -> Sequence[int]:
    # J rows are checked on k = 1..n-1; index 0 is structurally zero.
    if isinstance(row, DescentRow):
        if row.family is Family.FIXED_POINT_FREE:
            return row.coeffs[1:]
        return row.coeffs
    return list(row)


def is_symmetric(row: Coeffs) -> bool:
    """Palindromic test about the family's centre.

    Involution rows are compared as ``c[k] == c[n-1-k]``; fixed-point-free
    rows as ``c[k] == c[n-k]`` with ``c[n]`` taken to be zero.  Plain
    sequences use the involution convention.
    """
    if isinstance(row, DescentRow) and row.family is Family.FIXED_POINT_FREE:
        n = row.n
        return all(row[k] == row[n - k] for k in range(n + 1))
    seq = row.coeffs if isinstance(row, DescentRow) else tuple(row)
    return seq == seq[::-1]


def unimodality_break(seq: Sequence[int]) -> int | None:
    """Index of the first rise after a strict fall, or None if unimodal."""
    falling = False
    for i in range(1, len(seq)):
        if seq[i] < seq[i - 1]:
            falling = True
        elif seq[i] > seq[i - 1] and falling:
            return i
    return None


def is_unimodal(row: Coeffs) -> bool:
    return unimodality_break(_search_range(row)) is None


def log_concavity_break(seq: Sequence[int]) -> int | None:
    """First interior index ``i`` with ``seq[i]**2 < seq[i-1]*seq[i+1]``."""
    for i in range(1, len(seq) - 1):
        if seq[i] * seq[i] < seq[i - 1] * seq[i + 1]:
            return i
    return None


def is_log_concave(seq: Coeffs) -> bool:
    values = seq.coeffs if isinstance(seq, DescentRow) else seq
    return log_concavity_break(values) is None


def abel_identity(x: Sequence[int], a: Sequence[int]) -> tuple[int, int]:
    """Both sides of the summation-by-parts identity.

    Returns ``(sum a_i x_i, sum_k (x_k - x_{k+1}) (a_0 + ... + a_k))`` with
    ``x_{len}`` taken as zero.
    """
    if len(x) != len(a):
        raise ValueError("x and a must have equal length")
    direct = sum(ai * xi for ai, xi in zip(a, x))
    by_parts = 0
    prefix = 0
    for k in range(len(x)):
        prefix += a[k]
        nxt = x[k + 1] if k + 1 < len(x) else 0
        by_parts += (x[k] - nxt) * prefix
    return direct, by_parts


def abel_nonneg(x: Sequence[int], a: Sequence[int]) -> bool:
    """Check the hypotheses under which ``sum a_i x_i >= 0`` is guaranteed.

    The hypotheses are: ``x`` weakly decreasing with nonnegative last entry,
    and every prefix sum of ``a`` nonnegative.  Returns False if any fails.
    When they all hold the conclusion and the identity behind it are checked
    exactly; a failure there raises ArithmeticError.
    """
    if len(x) != len(a):
        raise ValueError("x and a must have equal length")
    if not x:
        return True
    if any(x[i] < x[i + 1] for i in range(len(x) - 1)) or x[-1] < 0:
        return False
    prefix = 0
    for ai in a:
        prefix += ai
        if prefix < 0:
            return False
    direct, by_parts = abel_identity(x, a)
    if direct != by_parts or direct < 0:
        raise ArithmeticError(f"summation by parts failed: {direct} vs {by_parts}")
    return True


def evaluate(row: Coeffs, t: int) -> int:
    """Exact value of the row's polynomial at integer ``t`` (Horner)."""
    coeffs = row.coeffs if isinstance(row, DescentRow) else row
    acc = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def evaluate_derivative(row: Coeffs, t: int) -> int:
    """Exact value of the first derivative at integer ``t``."""
    coeffs = row.coeffs if isinstance(row, DescentRow) else row
    acc = 0
    for k in range(len(coeffs) - 1, 0, -1):
        acc = acc * t + k * coeffs[k]
    return acc


def gamma_expand(row: DescentRow) -> GammaRow:
    """Gamma coefficients of a symmetric descent row, found by peeling.

    At each step the lowest surviving coefficient ``p[k]`` is the next gamma
    coefficient, and ``p[k] * t**k * (1+t)**(d-2k)`` is subtracted.
    """
    if not is_symmetric(row):
        raise NonSymmetricInput(f"{row.label} is not palindromic: {row.coeffs}")
    if row.family is Family.INVOLUTION:
        family, d, k_min = GammaFamily.A, row.n - 1, 0
    else:
        if row.n % 2:
            raise OddIndex(f"no gamma expansion for J_{row.n}")
        family, d, k_min = GammaFamily.B, row.n, 1
    k_max = d // 2 if family is GammaFamily.B else (row.n - 1) // 2
    p = list(row.coeffs) + [0] * (d + 1 - row.n)
    gammas = []
    for k in range(k_min, k_max + 1):
        g = p[k]
        gammas.append(g)
        if g:
            m = d - 2 * k
            for i in range(m + 1):
                p[k + i] -= g * comb(m, i)
    if any(p):
        # unreachable for palindromic input
        raise ArithmeticError(f"gamma peeling left residue {p} for {row.label}")
    return GammaRow(family, row.n, tuple(gammas))


def gamma_reconstruct(g: GammaRow) -> DescentRow:
    """Expand ``sum_k g_k t**k (1+t)**(d-2k)`` back into a descent row."""
    d = g.degree
    p = [0] * (d + 1)
    for k, gk in g.items():
        if gk:
            m = d - 2 * k
            for i in range(m + 1):
                p[k + i] += gk * comb(m, i)
    if g.family is GammaFamily.A:
        return DescentRow(Family.INVOLUTION, g.n, tuple(p))
    if p[g.n]:
        raise ArithmeticError(f"{g.label} reconstructs with nonzero t^{g.n} term")
    return DescentRow(Family.FIXED_POINT_FREE, g.n, tuple(p[: g.n]))
