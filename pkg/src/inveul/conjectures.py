"""Scans of the proved and conjectured properties, and the cross-check harness."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from . import closed_forms, oracle
from .closed_forms import Mismatch, SnParams, VerificationReport
from .errors import DivisibilityViolation
from .polyseq import (
    Family,
    evaluate,
    evaluate_derivative,
    gamma_expand,
    log_concavity_break,
    unimodality_break,
    is_symmetric,
)
from .recurrences import (
    TriangleCache,
    a_row,
    b_row,
    default_cache,
    double_factorial_odd,
    i_row,
    j_row,
    telephone,
)

DEFAULT_CEILING = 500
# b_{n,k} >= 0 is only conjectured from size 18 on
B_THRESHOLD = 18


class ScanProperty(enum.Enum):
    UNIMODAL_I = "unimodal-i"
    UNIMODAL_J = "unimodal-j"
    LOG_CONCAVE_I = "log-concave-i"
    GAMMA_NONNEG_A = "gamma-a"
    GAMMA_NONNEG_B = "gamma-b"
    BOUNDARY_A = "boundary-a"
    BOUNDARY_B = "boundary-b"

    @property
    def even_only(self) -> bool:
        return self in (ScanProperty.UNIMODAL_J, ScanProperty.GAMMA_NONNEG_B, ScanProperty.BOUNDARY_B)


class Status(enum.Enum):
    ALL_HOLD = "AllHold"
    COUNTEREXAMPLES = "Counterexamples"


@dataclass(frozen=True)
class Witness:
    n: int
    k: int
    value: int
    # below the conjecture's stated threshold, so not a counterexample to it
    expected: bool = False

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "value": str(self.value), "expected": self.expected}


@dataclass
class ScanResult:
    """Outcome of checking one property on every index of a range.

    ``errors`` collects internal inconsistencies (e.g. an alternating-sum
    identity failing); those are bugs, not findings about the conjecture.
    """

    property: ScanProperty
    n_range: tuple[int, int]
    witnesses: list[Witness] = field(default_factory=list)
    checked: int = 0
    errors: list[str] = field(default_factory=list)
    threshold: int | None = None

    @property
    def status(self) -> Status:
        return Status.COUNTEREXAMPLES if self.witnesses else Status.ALL_HOLD

    @property
    def unexpected(self) -> list[Witness]:
        return [w for w in self.witnesses if not w.expected]

    def to_dict(self) -> dict:
        out = {
            "property": self.property.value,
            "range": list(self.n_range),
            "status": self.status.value,
            "checked": self.checked,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }
        if self.threshold is not None:
            out["threshold"] = self.threshold
        if self.errors:
            out["errors"] = list(self.errors)
        return out


def _indices(prop: ScanProperty, n_lo: int, n_hi: int) -> range:
    if n_lo > n_hi:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")
    lo = max(n_lo, 2 if prop.even_only else 1)
    if prop.even_only:
        lo += lo % 2
        return range(lo, n_hi + 1, 2)
    return range(lo, n_hi + 1)


def _cache(caches: Mapping[str, TriangleCache] | None, family: str) -> TriangleCache:
    if caches and family in caches:
        return caches[family]
    return default_cache(family)


def scan(
    prop: ScanProperty | str,
    n_lo: int,
    n_hi: int,
    threshold: int = B_THRESHOLD,
    caches: Mapping[str, TriangleCache] | None = None,
) -> ScanResult:
    """Check ``prop`` exhaustively for every index in ``[n_lo, n_hi]``.

    Indices are row sizes; the J/b properties skip odd sizes.  Witness values
    are the offending entry itself, except for log-concavity where the value
    is the negative ``c[k]**2 - c[k-1]*c[k+1]``.
    """
    prop = ScanProperty(prop)
    if prop is ScanProperty.BOUNDARY_A:
        return boundary_check("A", n_lo, n_hi, caches=caches)
    if prop is ScanProperty.BOUNDARY_B:
        return boundary_check("B", n_lo, n_hi, threshold=threshold, caches=caches)

    result = ScanResult(prop, (n_lo, n_hi))
    if prop is ScanProperty.GAMMA_NONNEG_B:
        result.threshold = threshold
    for n in _indices(prop, n_lo, n_hi):
        result.checked += 1
        if prop is ScanProperty.UNIMODAL_I:
            c = i_row(n, _cache(caches, "I")).coeffs
            k = unimodality_break(c)
            if k is not None:
                result.witnesses.append(Witness(n, k, c[k]))
        elif prop is ScanProperty.UNIMODAL_J:
            c = j_row(n, _cache(caches, "J")).coeffs
            k = unimodality_break(c[1:])
            if k is not None:
                result.witnesses.append(Witness(n, k + 1, c[k + 1]))
        elif prop is ScanProperty.LOG_CONCAVE_I:
            c = i_row(n, _cache(caches, "I")).coeffs
            k = log_concavity_break(c)
            while k is not None:
                result.witnesses.append(Witness(n, k, c[k] * c[k] - c[k - 1] * c[k + 1]))
                nxt = log_concavity_break(c[k:])
                k = None if nxt is None else k + nxt
        elif prop is ScanProperty.GAMMA_NONNEG_A:
            for k, v in a_row(n, _cache(caches, "A")).items():
                if v < 0:
                    result.witnesses.append(Witness(n, k, v))
        elif prop is ScanProperty.GAMMA_NONNEG_B:
            for k, v in b_row(n, _cache(caches, "B")).items():
                if v < 0:
                    result.witnesses.append(Witness(n, k, v, expected=n < threshold))
    return result


def boundary_check(
    family: str,
    n_lo: int,
    n_hi: int,
    threshold: int = B_THRESHOLD,
    caches: Mapping[str, TriangleCache] | None = None,
) -> ScanResult:
    """Sign of the last gamma coefficient of each row, plus its identities.

    For ``a`` the last entry of row ``m`` is computed three ways: from the
    recurrence, as ``(-1)^h I_m(-1)`` (``m = 2h+1``) or ``(-1)^h I_m'(-1)``
    (``m = 2h+2``), and as the explicit alternating sum over ``I_{m,k}``.
    For ``b`` the recurrence value is compared with the explicit formula.
    """
    family = family.upper()
    prop = ScanProperty.BOUNDARY_A if family == "A" else ScanProperty.BOUNDARY_B
    result = ScanResult(prop, (n_lo, n_hi))
    if family == "B":
        result.threshold = threshold
    for m in _indices(prop, n_lo, n_hi):
        result.checked += 1
        if family == "A":
            g = a_row(m, _cache(caches, "A"))
            k = g.k_max
            value = g[k]
            row = i_row(m, _cache(caches, "I"))
            h = (m - 1) // 2
            sign = -1 if h % 2 else 1
            if m % 2:
                via_eval = sign * evaluate(row, -1)
                via_sum = sum((-1) ** ((h - j) % 2) * c for j, c in enumerate(row.coeffs))
            else:
                h = (m - 2) // 2
                sign = -1 if h % 2 else 1
                via_eval = sign * evaluate_derivative(row, -1)
                via_sum = sum((-1) ** ((h + 1 - j) % 2) * j * c for j, c in enumerate(row.coeffs) if j)
            if not value == via_eval == via_sum:
                result.errors.append(
                    f"a_{m},{k}: recurrence {value}, evaluation {via_eval}, alternating sum {via_sum}"
                )
            if value < 0:
                result.witnesses.append(Witness(m, k, value))
        else:
            g = b_row(m, _cache(caches, "B"))
            k = m // 2
            value = g[k]
            jr = j_row(m, _cache(caches, "J"))
            explicit = closed_forms.b_explicit(m, k, lambda _n: jr.coeffs)
            if value != explicit:
                result.errors.append(f"b_{m},{k}: recurrence {value}, explicit {explicit}")
            if value < 0:
                result.witnesses.append(Witness(m, k, value, expected=m < threshold))
    return result


def _first_diff(rows: Mapping[str, tuple]) -> int | None:
    vals = list(rows.values())
    width = max(len(v) for v in vals)
    for k in range(width):
        col = {v[k] if k < len(v) else None for v in vals}
        if len(col) > 1:
            return k
    return None


def cross_verify(
    n_max_recurrence: int,
    n_max_oracle: int,
    n_max_oracle_fpf: int | None = None,
    workers: int = 1,
    caches: Mapping[str, TriangleCache] | None = None,
) -> VerificationReport:
    """Three-way agreement of recurrence, closed form and enumeration.

    Sizes are visited in increasing order and, within a size, the I row,
    the J row, the a row and the b row in that order; the report stops at
    the first disagreement.  The gamma rows are compared against the
    explicit formula applied to the recurrence rows and against peeling of
    those rows.  Oracle rows are included up to ``n_max_oracle`` (I) and
    ``n_max_oracle_fpf`` (J, defaulting to ``n_max_oracle``).
    """
    fpf_max = n_max_oracle if n_max_oracle_fpf is None else n_max_oracle_fpf
    report = VerificationReport(
        name="cross-verify",
        methods=("recurrence", "closed-form", "oracle", "explicit-gamma", "gamma-peeling"),
        n_range=(1, n_max_recurrence),
    )
    report.notes.append(f"oracle up to I_{n_max_oracle}, J_{fpf_max}")
    ci, cj = _cache(caches, "I"), _cache(caches, "J")
    ca, cb = _cache(caches, "A"), _cache(caches, "B")
    top = max(n_max_recurrence, n_max_oracle, fpf_max)

    def compare(family: str, n: int, rows: dict[str, tuple]) -> bool:
        report.checked += 1
        k = _first_diff(rows)
        if k is None:
            return True
        report.mismatch = Mismatch(family, n, k, rows)
        return False

    for n in range(1, top + 1):
        try:
            if n <= n_max_recurrence or n <= n_max_oracle:
                rows = {"recurrence": i_row(n, ci).coeffs}
                if n <= n_max_recurrence:
                    rows["closed-form"] = closed_forms.i_closed_row(n).coeffs
                if n <= n_max_oracle:
                    rows["oracle"] = oracle.brute_force_row(n, Family.INVOLUTION, workers, max_n=n).coeffs
                if not compare("I", n, rows):
                    return report
            if n <= n_max_recurrence or n <= fpf_max:
                if n % 2:
                    rows = {"recurrence": (0,) * n}
                else:
                    rows = {"recurrence": j_row(n, cj).coeffs}
                if n <= n_max_recurrence:
                    rows["closed-form"] = closed_forms.j_closed_row(n).coeffs
                if n <= fpf_max:
                    rows["oracle"] = oracle.brute_force_row(
                        n, Family.FIXED_POINT_FREE, workers, max_n=n
                    ).coeffs
                if not compare("J", n, rows):
                    return report
            if n <= n_max_recurrence:
                irow = i_row(n, ci)
                rows = {
                    "recurrence": a_row(n, ca).gammas,
                    "explicit-gamma": closed_forms.a_explicit_row(n, lambda _n: irow.coeffs).gammas,
                    "gamma-peeling": gamma_expand(irow).gammas,
                }
                if not compare("a", n, rows):
                    return report
                if n % 2 == 0:
                    jrow = j_row(n, cj)
                    rows = {
                        "recurrence": b_row(n, cb).gammas,
                        "explicit-gamma": closed_forms.b_explicit_row(n, lambda _n: jrow.coeffs).gammas,
                        "gamma-peeling": gamma_expand(jrow).gammas,
                    }
                    if not compare("b", n, rows):
                        return report
        except DivisibilityViolation as exc:
            report.mismatch = Mismatch(exc.what, exc.n, exc.k, {"error": str(exc)})
            return report
        except ValueError as exc:
            # a corrupted triangle can produce rows that are not valid descent rows
            report.mismatch = Mismatch("?", n, None, {"error": str(exc)})
            return report
    return report


def counting_check(n_max: int, caches: Mapping[str, TriangleCache] | None = None) -> VerificationReport:
    """Row sums against telephone numbers and odd double factorials."""
    report = VerificationReport("row-sums", ("recurrence", "counting"), (1, n_max))
    ci, cj = _cache(caches, "I"), _cache(caches, "J")
    for n in range(1, n_max + 1):
        report.checked += 1
        got = i_row(n, ci).total()
        want = telephone(n)
        if got != want:
            report.mismatch = Mismatch("I", n, None, {"row-sum": got, "telephone": want})
            return report
        if n % 2 == 0:
            report.checked += 1
            got = j_row(n, cj).total()
            want = double_factorial_odd(n)
            if got != want:
                report.mismatch = Mismatch("J", n, None, {"row-sum": got, "double-factorial": want})
                return report
    return report


def theorem_check(n_max: int, caches: Mapping[str, TriangleCache] | None = None) -> VerificationReport:
    """Symmetry and unimodality of every I and J row up to ``n_max``.

    Building the rows also runs the divisibility check at every step.
    """
    report = VerificationReport("symmetry-unimodality", ("recurrence",), (1, n_max))
    ci, cj = _cache(caches, "I"), _cache(caches, "J")
    try:
        for n in range(1, n_max + 1):
            rows = [i_row(n, ci)] + ([j_row(n, cj)] if n % 2 == 0 else [])
            for row in rows:
                report.checked += 1
                if not is_symmetric(row):
                    report.mismatch = Mismatch(row.family.value, n, None, {"not symmetric": row.coeffs})
                    return report
                search = row.coeffs[1:] if row.family is Family.FIXED_POINT_FREE else row.coeffs
                k = unimodality_break(search)
                if k is not None:
                    report.mismatch = Mismatch(row.family.value, n, k, {"not unimodal": row.coeffs})
                    return report
    except DivisibilityViolation as exc:
        report.mismatch = Mismatch(exc.what, exc.n, exc.k, {"error": str(exc)})
    return report


def s_recurrence_check(bound: int = 10, n_max: int = 40) -> VerificationReport:
    report = VerificationReport("s-recurrence-grid", ("direct-sum", "three-term-recurrence"), (0, n_max))
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            sub = closed_forms.verify_s_recurrence(SnParams(x, y), n_max)
            report.checked += sub.checked
            if not sub.ok:
                report.mismatch = sub.mismatch
                report.notes.append(f"x={x}, y={y}")
                return report
    return report


def degree_check(k_max: int = 6) -> VerificationReport:
    report = VerificationReport("j-degree", ("closed-form", "finite-differences"), (1, k_max))
    for k in range(1, k_max + 1):
        report.checked += 1
        if not closed_forms.j_degree_check(k):
            report.mismatch = Mismatch("J", 0, k, {"d-th difference": "not constant 1"})
            return report
    return report
