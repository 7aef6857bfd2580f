"""The three published tables, shipped as data, and their recomputation."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .records import OutputRecord, read_csv
from .recurrences import a_row, b_row, i_row, j_row

TABLE_FILES = {1: "table1.csv", 2: "table2.csv", 3: "table3.csv"}


def load_table(number: int, data_dir: Path | None = None) -> list[OutputRecord]:
    name = TABLE_FILES[number]
    if data_dir is not None:
        with (Path(data_dir) / name).open() as fh:
            return read_csv(fh)
    with resources.files("inveul").joinpath("data", name).open() as fh:
        return read_csv(fh)


def compute_cell(family: str, n: int, k: int) -> int:
    if family == "I":
        return i_row(n)[k]
    if family == "J":
        return j_row(n, allow_odd=True)[k]
    if family == "a":
        return a_row(n)[k]
    if family == "b":
        return b_row(n)[k]
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class CellDiff:
    table: int
    family: str
    n: int
    k: int
    published: int
    computed: int

    def describe(self) -> str:
        return (
            f"Table {self.table}, {self.family}(n={self.n}, k={self.k}): "
            f"published {self.published}, computed {self.computed}"
        )


def reproduce(data_dir: Path | None = None) -> tuple[int, list[CellDiff]]:
    """Recompute every published cell; returns (cells checked, differences)."""
    diffs = []
    count = 0
    for number in TABLE_FILES:
        for rec in load_table(number, data_dir):
            count += 1
            got = compute_cell(rec.family, rec.n, rec.k)
            if got != rec.int_value:
                diffs.append(CellDiff(number, rec.family, rec.n, rec.k, rec.int_value, got))
    return count, diffs


def _poly_tex(coeffs) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        coef = str(c) if (c != 1 or k == 0) else ""
        terms.append(coef + mono)
    return "$" + "+".join(terms) + "$" if terms else "0"


def _cell_tex(v: int) -> str:
    return f"${v}$" if v < 0 else str(v)


def latex_tables() -> str:
    """The three tables laid out as in the publication."""
    out = [
        r"\begin{tabular}{|l|l|l|}",
        r"\hline",
        r"$n$  & $I_n(t)$ & $J_{n}(t)$  \\\hline",
    ]
    for n in range(1, 7):
        out.append(f"{n} & {_poly_tex(i_row(n).coeffs)} & {_poly_tex(j_row(n, allow_odd=True).coeffs)} \\\\\\hline")
    out.append(r"\end{tabular}")
    out.append("")

    ns = list(range(1, 17))
    out.append(r"\begin{tabular}{|l|" + "c|" * len(ns) + "}")
    out.append(r"\hline")
    out.append(r"$k\setminus n$&" + "&".join(map(str, ns)) + r"\\\hline")
    for k in range(8):
        cells = [_cell_tex(a_row(n)[k]) if k <= (n - 1) // 2 else "" for n in ns]
        out.append(f"{k} & " + " & ".join(cells) + r"\\\hline")
    out.append(r"\end{tabular}")
    out.append("")

    sizes = list(range(2, 25, 2))
    out.append(r"\begin{tabular}{|l|" + "c|" * len(sizes) + "}")
    out.append(r"\hline")
    out.append(r"$k\setminus 2n$&" + "&".join(map(str, sizes)) + r"\\\hline")
    for k in range(1, 13):
        cells = [_cell_tex(b_row(n)[k]) if k <= n // 2 else "" for n in sizes]
        out.append(f"{k} & " + " & ".join(cells) + r"\\\hline")
    out.append(r"\end{tabular}")
    return "\n".join(out) + "\n"
