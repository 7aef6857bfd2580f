"""Explicit binomial-sum formulas, independent of the recurrences.

These evaluate the same triangles coefficient by coefficient, so they can
cross-check the recurrences and the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .errors import DivisibilityViolation, IndexOutOfRange, OddIndex
from .polyseq import DescentRow, Family, GammaFamily, GammaRow


@dataclass(frozen=True)
class SnParams:
    """Free parameters ``x, y`` of the auxiliary sum

    ``s(n) = sum_k C(x+k-1, k) * C(y+n-2k, n-2k)``.
    """

    x: int
    y: int


@dataclass
class Mismatch:
    family: str
    n: int
    k: int | None
    values: dict[str, object]

    def describe(self) -> str:
        where = f"{self.family}_{self.n}" + (f", k={self.k}" if self.k is not None else "")
        parts = "; ".join(f"{m}={v}" for m, v in self.values.items())
        return f"mismatch at {where}: {parts}"


@dataclass
class VerificationReport:
    """Outcome of comparing two or more computations over an index range."""

    name: str
    methods: tuple[str, ...]
    n_range: tuple[int, int]
    checked: int = 0
    mismatch: Mismatch | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "methods": list(self.methods),
            "range": list(self.n_range),
            "checked": self.checked,
            "ok": self.ok,
            "first_mismatch": None,
        }
        if self.mismatch is not None:
            m = self.mismatch
            out["first_mismatch"] = {
                "family": m.family,
                "n": m.n,
                "k": m.k,
                "values": {key: _jsonable(v) for key, v in m.values.items()},
            }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _jsonable(v):
    # exact integers go out as decimal strings
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    return v


def binomial(m: int, j: int) -> int:
    """Generalised binomial ``m(m-1)...(m-j+1)/j!``; zero for ``j < 0``.

    Valid for negative ``m``, e.g. ``binomial(-1, 0) == 1`` and
    ``binomial(-1, 3) == -1``.
    """
    if j < 0:
        return 0
    if m >= 0:
        return comb(m, j)
    # C(m, j) = (-1)^j C(j-m-1, j) for m < 0
    v = comb(j - m - 1, j)
    return -v if j % 2 else v


def j_closed(n: int, k: int) -> int:
    """``J_{2n,k}`` from the alternating binomial sum; ``n`` is the half-size."""
    if n < 1 or not 0 <= k <= 2 * n:
        raise IndexOutOfRange(f"J_{{2n,k}} needs n >= 1 and 0 <= k <= 2n, got n={n}, k={k}")
    total = 0
    for i in range(k + 1):
        tri = i * (i + 1) // 2
        term = binomial(2 * n + 1, k - i) * binomial(tri + n - 1, tri - 1)
        total += -term if (k - i) % 2 else term
    return total


@lru_cache(maxsize=None)
def _s_inner(n: int, r: int) -> int:
    # s(n) at x = r(r+1)/2, y = r
    return _s_term_sum(r * (r + 1) // 2, r, n)


def _s_term_sum(x: int, y: int, n: int) -> int:
    return sum(binomial(x + k - 1, k) * binomial(y + n - 2 * k, n - 2 * k) for k in range(n // 2 + 1))


def i_closed(n: int, k: int) -> int:
    """``I_{n,k}`` as ``sum_r (-1)^(k-r) C(n+1, k-r) s_n(r)``."""
    if n < 1 or not 0 <= k <= n - 1:
        raise IndexOutOfRange(f"I_{{n,k}} needs n >= 1 and 0 <= k <= n-1, got n={n}, k={k}")
    total = 0
    for r in range(k + 1):
        term = comb(n + 1, k - r) * _s_inner(n, r)
        total += -term if (k - r) % 2 else term
    return total


def i_closed_row(n: int) -> DescentRow:
    return DescentRow(Family.INVOLUTION, n, tuple(i_closed(n, k) for k in range(n)))


def j_closed_row(size: int) -> DescentRow:
    """Closed-form ``J_size`` row; odd sizes give the zero row."""
    if size % 2:
        return DescentRow(Family.FIXED_POINT_FREE, size, (0,) * size)
    h = size // 2
    return DescentRow(Family.FIXED_POINT_FREE, size, tuple(j_closed(h, k) for k in range(size)))


def s_sequence(p: SnParams, n_max: int) -> list[int]:
    """``s(0), ..., s(n_max)`` by direct summation."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return [_s_term_sum(p.x, p.y, n) for n in range(n_max + 1)]


def s_recurrence_residual(p: SnParams, s: Sequence[int], n: int) -> int:
    """``(2x+y+n+1) s(n) + (y+1) s(n+1) - (n+2) s(n+2)``; zero when the recurrence holds."""
    return (2 * p.x + p.y + n + 1) * s[n] + (p.y + 1) * s[n + 1] - (n + 2) * s[n + 2]


def verify_s_recurrence(p: SnParams, n_max: int) -> VerificationReport:
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    s = s_sequence(p, n_max)
    report = VerificationReport(
        name=f"s-recurrence(x={p.x}, y={p.y})",
        methods=("direct-sum", "three-term-recurrence"),
        n_range=(0, n_max - 2),
    )
    for n in range(n_max - 1):
        res = s_recurrence_residual(p, s, n)
        report.checked += 1
        if res:
            report.mismatch = Mismatch("s", n, None, {"residual": res, "s": tuple(s[n : n + 3])})
            break
    return report


def _weighted(top_factor: int, m: int, i: int, what: str, n: int, k: int) -> int:
    # top_factor / m * C(m, i), checked exact
    num = top_factor * comb(m, i)
    q, r = divmod(num, m)
    if r:
        raise DivisibilityViolation(what, n, k, num, m)
    return q


RowAccess = Callable[[int], Sequence[int]]


def _default_i(n: int) -> Sequence[int]:
    from .recurrences import i_row

    return i_row(n).coeffs


def _default_j(n: int) -> Sequence[int]:
    from .recurrences import j_row

    return j_row(n).coeffs


def a_explicit(n: int, k: int, i_rows: RowAccess | None = None) -> int:
    """``a_{n,k}`` as an alternating combination of ``I_{n,0..k}``.

    ``i_rows(n)`` must return the coefficient list of ``I_n``; by default the
    recurrence triangle is used.
    """
    if n < 1 or not 0 <= k <= (n - 1) // 2:
        raise IndexOutOfRange(f"a_{{n,k}} needs 0 <= k <= (n-1)/2, got n={n}, k={k}")
    row = (i_rows or _default_i)(n)
    centre = 2 * k + 1 == n
    total = row[k] if centre else 0
    for j in range(k if centre else k + 1):
        w = _weighted(n - 2 * j - 1, n - k - j - 1, k - j, "a explicit weight", n, k)
        total += (-w if (k - j) % 2 else w) * row[j]
    return total


def b_explicit(n: int, k: int, j_rows: RowAccess | None = None) -> int:
    """``b_{n,k}`` for even size ``n`` and ``1 <= k <= n/2``."""
    if n % 2:
        raise OddIndex(f"b_{{n,k}} needs even n, got {n}")
    h = n // 2
    if n < 2 or not 1 <= k <= h:
        raise IndexOutOfRange(f"b_{{n,k}} needs 1 <= k <= n/2, got n={n}, k={k}")
    row = (j_rows or _default_j)(n)
    centre = k == h
    total = row[k] if centre else 0
    for j in range(1, k if centre else k + 1):
        w = _weighted(n - 2 * j, n - k - j, k - j, "b explicit weight", n, k)
        total += (-w if (k - j) % 2 else w) * row[j]
    return total


def a_explicit_row(n: int, i_rows: RowAccess | None = None) -> GammaRow:
    return GammaRow(GammaFamily.A, n, tuple(a_explicit(n, k, i_rows) for k in range((n - 1) // 2 + 1)))


def b_explicit_row(n: int, j_rows: RowAccess | None = None) -> GammaRow:
    return GammaRow(GammaFamily.B, n, tuple(b_explicit(n, k, j_rows) for k in range(1, n // 2 + 1)))


def forward_differences(values: Sequence[int], order: int) -> list[int]:
    out = list(values)
    for _ in range(order):
        out = [b - a for a, b in zip(out, out[1:])]
    return out


def j_degree_check(k: int, n_start: int | None = None, extra: int = 3) -> bool:
    """True if the ``d``-th forward difference of ``n -> J_{2n,k}`` is constantly 1.

    ``d = k(k+1)/2 - 1``.  The polynomial agrees with ``J_{2n,k}`` once
    ``2n >= k``; evaluation starts there and covers ``d + 1 + extra`` points.
    """
    if k < 1:
        raise ValueError("degree property needs k >= 1")
    d = k * (k + 1) // 2 - 1
    start = n_start if n_start is not None else max(1, (k + 1) // 2)
    values = [j_closed(n, k) for n in range(start, start + d + 1 + extra)]
    diffs = forward_differences(values, d)
    return all(v == 1 for v in diffs)

