"""Coefficient triangles built bottom-up from the four linear recurrences.

Each recurrence has the shape ``m * X[n][k] = (integer combination of
earlier rows)``.  The division by ``m`` is always exact; it is checked at
every step and a remainder raises :class:`DivisibilityViolation`.
"""

from __future__ import annotations

import threading
from typing import Callable, Mapping, Sequence

from .errors import DivisibilityViolation, OddIndex
from .polyseq import DescentRow, Family, GammaFamily, GammaRow

# Base cases, read off the small tables.
I_BASE = {1: (1,), 2: (1, 1)}
J_BASE = {2: (0, 1)}
A_BASE = {1: (1,), 2: (1,)}
B_BASE = {2: (1,)}

FAMILIES = ("I", "J", "A", "B")


def _at(row: Sequence[int], k: int, offset: int = 0) -> int:
    i = k - offset
    if 0 <= i < len(row):
        return row[i]
    return 0


def _exact(what: str, n: int, k: int, num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise DivisibilityViolation(what, n, k, num, den)
    return q


def i_step(n: int, prev1: Sequence[int], prev2: Sequence[int]) -> list[int]:
    """Row ``I_n`` from ``I_{n-1}`` and ``I_{n-2}`` (n >= 3)."""
    out = []
    for k in range(n):
        rhs = (
            (k + 1) * _at(prev1, k)
            + (n - k) * _at(prev1, k - 1)
            + ((k + 1) ** 2 + n - 2) * _at(prev2, k)
            + (2 * k * (n - k - 1) - n + 3) * _at(prev2, k - 1)
            + ((n - k) ** 2 + n - 2) * _at(prev2, k - 2)
        )
        out.append(_exact("I recurrence", n, k, rhs, n))
    return out


def j_step(n: int, prev: Sequence[int]) -> list[int]:
    """Row ``J_n`` from ``J_{n-2}``; ``n`` is the (even) size, n >= 4."""
    out = []
    for k in range(n):
        rhs = (
            (k * (k + 1) + n - 2) * _at(prev, k)
            + 2 * ((k - 1) * (n - k - 1) + 1) * _at(prev, k - 1)
            + ((n - k) * (n - k + 1) + n - 2) * _at(prev, k - 2)
        )
        out.append(_exact("J recurrence", n, k, rhs, n))
    return out


def a_step(n: int, prev1: Sequence[int], prev2: Sequence[int]) -> list[int]:
    """Gamma row ``a_n`` from ``a_{n-1}`` and ``a_{n-2}`` (n >= 3)."""
    out = []
    for k in range((n - 1) // 2 + 1):
        rhs = (
            (k + 1) * _at(prev1, k)
            + (2 * n - 4 * k) * _at(prev1, k - 1)
            + (k * (k + 2) + n - 1) * _at(prev2, k)
            + ((k - 1) * (4 * n - 8 * k - 14) + 2 * n - 8) * _at(prev2, k - 1)
            + 4 * (n - 2 * k) * (n - 2 * k + 1) * _at(prev2, k - 2)
        )
        out.append(_exact("a recurrence", n, k, rhs, n))
    return out


def b_step(n: int, prev: Sequence[int]) -> list[int]:
    """Gamma row ``b_n`` (entries k = 1..n/2) from ``b_{n-2}``; ``n`` even >= 4."""
    h = n // 2
    out = []
    for k in range(1, h + 1):
        rhs = (
            (k * (k + 1) + n - 2) * _at(prev, k, 1)
            + (2 + 2 * (k - 1) * (2 * n - 4 * k - 3)) * _at(prev, k - 1, 1)
            + 8 * (h - k + 1) * (n - 2 * k + 1) * _at(prev, k - 2, 1)
        )
        out.append(_exact("b recurrence", n, k, rhs, n))
    return out


class TriangleCache:
    """Memoised rows of one triangle, extended on demand.

    Rows are stored as tuples of ints keyed by size ``n``.  ``J`` and ``B``
    only have even keys.  A lock serialises extension so the cache can be
    read from several threads.
    """

    def __init__(self, family: str, base: Mapping[int, Sequence[int]] | None = None):
        family = family.upper()
        if family not in FAMILIES:
            raise ValueError(f"unknown triangle {family!r}")
        self.family = family
        self.even_only = family in ("J", "B")
        default = {"I": I_BASE, "J": J_BASE, "A": A_BASE, "B": B_BASE}[family]
        self.rows: dict[int, tuple[int, ...]] = {
            n: tuple(r) for n, r in (base or default).items()
        }
        self.max_n = max(self.rows)
        self._lock = threading.Lock()
        self._step: Callable = {"I": i_step, "J": j_step, "A": a_step, "B": b_step}[family]

    def get(self, n: int) -> tuple[int, ...]:
        if n < 1:
            raise ValueError(f"row index must be positive, got {n}")
        if self.even_only and n % 2:
            raise OddIndex(f"{self.family} rows exist only for even n, got {n}")
        row = self.rows.get(n)
        if row is not None:
            return row
        self.extend(n)
        return self.rows[n]

    def extend(self, n_max: int) -> None:
        with self._lock:
            step = 2 if self.even_only else 1
            n = self.max_n + step
            while n <= n_max:
                if self.even_only:
                    row = self._step(n, self.rows[n - 2])
                else:
                    row = self._step(n, self.rows[n - 1], self.rows[n - 2])
                self.rows[n] = tuple(row)
                self.max_n = n
                n += step

    def seed(self, rows: Mapping[int, Sequence[int]]) -> int:
        """Adopt externally stored rows that extend the cache contiguously.

        Each candidate is accepted only if it matches the recurrence applied
        to its predecessors.  Returns how many rows were adopted.
        """
        step = 2 if self.even_only else 1
        adopted = 0
        with self._lock:
            n = self.max_n + step
            while n in rows:
                if self.even_only:
                    expected = self._step(n, self.rows[n - 2])
                else:
                    expected = self._step(n, self.rows[n - 1], self.rows[n - 2])
                if tuple(expected) != tuple(rows[n]):
                    break
                self.rows[n] = tuple(expected)
                self.max_n = n
                adopted += 1
                n += step
        return adopted


_DEFAULT = {f: TriangleCache(f) for f in FAMILIES}


def default_cache(family: str) -> TriangleCache:
    return _DEFAULT[family.upper()]


def j_zero_row(n: int) -> DescentRow:
    """The all-zero ``J_n`` row for odd ``n``."""
    if n % 2 == 0:
        raise ValueError(f"J_{n} is not identically zero")
    return DescentRow(Family.FIXED_POINT_FREE, n, (0,) * n)


def i_row(n: int, cache: TriangleCache | None = None) -> DescentRow:
    cache = cache or _DEFAULT["I"]
    return DescentRow(Family.INVOLUTION, n, cache.get(n))


def j_row(n: int, cache: TriangleCache | None = None, allow_odd: bool = False) -> DescentRow:
    """Row ``J_n`` for even size ``n``.

    Odd ``n`` raises :class:`OddIndex` unless ``allow_odd`` is set, in which
    case the all-zero row is returned.
    """
    if n % 2:
        if allow_odd and n > 0:
            return j_zero_row(n)
        raise OddIndex(f"J_n is computed only for even n, got {n}")
    cache = cache or _DEFAULT["J"]
    return DescentRow(Family.FIXED_POINT_FREE, n, cache.get(n))


def a_row(n: int, cache: TriangleCache | None = None) -> GammaRow:
    cache = cache or _DEFAULT["A"]
    return GammaRow(GammaFamily.A, n, cache.get(n))


def b_row(n: int, cache: TriangleCache | None = None) -> GammaRow:
    if n % 2:
        raise OddIndex(f"b_n is defined only for even n, got {n}")
    cache = cache or _DEFAULT["B"]
    return GammaRow(GammaFamily.B, n, cache.get(n))


def telephone(n: int) -> int:
    """Number of involutions of an ``n``-set."""
    a, b = 1, 1  # T(0), T(1)
    if n == 0:
        return 1
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b


def double_factorial_odd(n: int) -> int:
    """``(n-1)!!`` for even ``n``: the number of perfect matchings of ``n`` points."""
    if n % 2:
        return 0
    out = 1
    for m in range(1, n, 2):
        out *= m
    return out
