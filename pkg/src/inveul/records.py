"""Flat ``(family, n, k, value)`` records: CSV / JSON-lines I/O and the row cache."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, TextIO

from .polyseq import DescentRow, GammaRow
from .recurrences import TriangleCache, default_cache

CACHE_ENV = "INVEUL_CACHE"
CSV_HEADER = ("family", "n", "k", "value")

# record family label -> triangle name
TRIANGLE_OF = {"I": "I", "J": "J", "a": "A", "b": "B"}


@dataclass(frozen=True)
class OutputRecord:
    family: str
    n: int
    k: int
    value: str  # exact decimal

    @classmethod
    def of(cls, family: str, n: int, k: int, value: int) -> "OutputRecord":
        return cls(family, int(n), int(k), str(int(value)))

    @property
    def int_value(self) -> int:
        return int(self.value)

    def to_json(self) -> str:
        return json.dumps({"family": self.family, "n": self.n, "k": self.k, "value": self.value})


def records_of(row: DescentRow | GammaRow) -> list[OutputRecord]:
    if isinstance(row, DescentRow):
        return [OutputRecord.of(row.family.value, row.n, k, v) for k, v in enumerate(row.coeffs)]
    return [OutputRecord.of(row.family.value, row.n, k, v) for k, v in row.items()]


def write_csv(records: Iterable[OutputRecord], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow((r.family, r.n, r.k, r.value))


def write_jsonl(records: Iterable[OutputRecord], out: TextIO) -> None:
    for r in records:
        out.write(r.to_json() + "\n")


def read_csv(src: TextIO) -> list[OutputRecord]:
    lines = (line for line in src if line.strip() and not line.lstrip().startswith("#"))
    reader = csv.DictReader(lines)
    return [OutputRecord(r["family"], int(r["n"]), int(r["k"]), str(int(r["value"]))) for r in reader]


def read_jsonl(src: TextIO) -> list[OutputRecord]:
    out = []
    for line in src:
        line = line.strip()
        if not line:
            continue
        d = json.loads(line)
        # int() round trip rejects anything that is not an exact decimal integer
        out.append(OutputRecord(d["family"], int(d["n"]), int(d["k"]), str(int(d["value"]))))
    return out


def parse(text: str, fmt: str) -> list[OutputRecord]:
    src = io.StringIO(text)
    return read_csv(src) if fmt == "csv" else read_jsonl(src)


def group_rows(records: Iterable[OutputRecord]) -> dict[str, dict[int, list[int]]]:
    """``{family: {n: [values ordered by k]}}``."""
    buckets: dict[str, dict[int, dict[int, int]]] = {}
    for r in records:
        buckets.setdefault(r.family, {}).setdefault(r.n, {})[r.k] = r.int_value
    out: dict[str, dict[int, list[int]]] = {}
    for fam, rows in buckets.items():
        out[fam] = {n: [cells[k] for k in sorted(cells)] for n, cells in rows.items()}
    return out


def cache_path(flag: str | None) -> Path | None:
    path = flag or os.environ.get(CACHE_ENV)
    return Path(path) if path else None


def load_cache(path: Path, caches: Mapping[str, TriangleCache] | None = None) -> dict[str, int]:
    """Seed triangles from a JSON-lines cache file.

    Rows are adopted only where they extend a triangle contiguously and
    agree with the recurrence (divisibility included) on re-validation.
    Returns the number of rows adopted per triangle.
    """
    if not path.exists():
        return {}
    with path.open() as fh:
        grouped = group_rows(read_jsonl(fh))
    adopted = {}
    for fam, rows in grouped.items():
        tri = TRIANGLE_OF.get(fam)
        if tri is None:
            continue
        cache = caches[tri] if caches and tri in caches else default_cache(tri)
        adopted[tri] = cache.seed(rows)
    return adopted


def save_cache(path: Path, caches: Mapping[str, TriangleCache] | None = None) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with tmp.open("w") as fh:
        for label, tri in TRIANGLE_OF.items():
            cache = caches[tri] if caches and tri in caches else default_cache(tri)
            for n in sorted(cache.rows):
                row = cache.rows[n]
                k0 = 1 if tri == "B" else 0
                write_jsonl((OutputRecord.of(label, n, k0 + i, v) for i, v in enumerate(row)), fh)
    tmp.replace(path)

