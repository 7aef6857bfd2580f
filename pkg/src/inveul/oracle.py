"""Brute-force descent histograms over involutions.

Involutions are generated directly (never by filtering all of ``S_n``):
the largest unplaced position is either a fixed point or paired with a
smaller unplaced position.  The top levels of that tree are cut into
independent tasks so enumeration can be spread over worker processes; each
task returns its own histogram and the results are summed, so the merged
histogram does not depend on scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Sequence

from .errors import FeasibilityExceeded
from .polyseq import DescentRow, Family

# one-line notation: word[i] is the image of i+1
InvolutionWord = tuple[int, ...]

DEFAULT_BOUNDS = {Family.INVOLUTION: 14, Family.FIXED_POINT_FREE: 16}


def is_involution(word: Sequence[int], fixed_point_free: bool = False) -> bool:
    n = len(word)
    if sorted(word) != list(range(1, n + 1)):
        return False
    for i, v in enumerate(word):
        if word[v - 1] != i + 1:
            return False
        if fixed_point_free and v == i + 1:
            return False
    return True


def descent_count(word: Sequence[int]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def _walk(word: list[int], free: list[int], allow_fixed: bool):
    """Yield ``word`` (mutated in place) once per completion of the partial involution."""
    if not free:
        yield word
        return
    i = free.pop()
    if allow_fixed:
        word[i] = i + 1
        yield from _walk(word, free, allow_fixed)
    for pos in range(len(free) - 1, -1, -1):
        j = free.pop(pos)
        word[i], word[j] = j + 1, i + 1
        yield from _walk(word, free, allow_fixed)
        free.insert(pos, j)
    word[i] = 0
    free.append(i)


def enumerate_involutions(n: int, family: Family = Family.INVOLUTION) -> Iterator[InvolutionWord]:
    """Every involution of ``[n]`` (or every fixed-point-free one) exactly once."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    allow_fixed = family is Family.INVOLUTION
    if not allow_fixed and n % 2:
        return
    for w in _walk([0] * n, list(range(n)), allow_fixed):
        yield tuple(w)


def _histogram(n: int, word: list[int], free: list[int], allow_fixed: bool) -> list[int]:
    hist = [0] * max(n, 1)
    for w in _walk(word, free, allow_fixed):
        d = 0
        prev = w[0]
        for v in w[1:]:
            if prev > v:
                d += 1
            prev = v
        hist[d] += 1
    return hist


def _split(n: int, allow_fixed: bool, target: int) -> list[tuple[list[int], list[int]]]:
    # expand the top of the tree breadth-first until there are enough tasks
    tasks = [([0] * n, list(range(n)))]
    while len(tasks) < target:
        nxt = []
        for word, free in tasks:
            if not free:
                nxt.append((word, free))
                continue
            i = free[-1]
            rest = free[:-1]
            if allow_fixed:
                w = word[:]
                w[i] = i + 1
                nxt.append((w, rest[:]))
            for pos, j in enumerate(rest):
                w = word[:]
                w[i], w[j] = j + 1, i + 1
                nxt.append((w, rest[:pos] + rest[pos + 1 :]))
        if len(nxt) == len(tasks):
            break
        tasks = nxt
    return tasks


def _run_task(args) -> list[int]:
    n, word, free, allow_fixed = args
    return _histogram(n, word, free, allow_fixed)


def default_workers() -> int:
    return os.cpu_count() or 1


def descent_histogram(n: int, family: Family = Family.INVOLUTION, workers: int = 1) -> list[int]:
    """Counts of involutions of ``[n]`` by number of descents, indexed 0..n-1."""
    if n < 1:
        raise ValueError("n must be positive")
    allow_fixed = family is Family.INVOLUTION
    if not allow_fixed and n % 2:
        return [0] * n
    if workers <= 1 or n < 6:
        return _histogram(n, [0] * n, list(range(n)), allow_fixed)
    tasks = _split(n, allow_fixed, 4 * workers)
    hist = [0] * n
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_run_task, [(n, w, f, allow_fixed) for w, f in tasks]):
            for k, c in enumerate(part):
                hist[k] += c
    return hist


def brute_force_row(
    n: int,
    family: Family = Family.INVOLUTION,
    workers: int = 1,
    max_n: int | None = None,
) -> DescentRow:
    """Descent row tallied over all (fixed-point-free) involutions of ``[n]``.

    ``max_n`` overrides the feasibility bound for the family.
    """
    bound = DEFAULT_BOUNDS[family] if max_n is None else max_n
    if n > bound:
        raise FeasibilityExceeded(
            f"enumerating {family.value}_{n} exceeds the bound n <= {bound}; raise max_n to force it"
        )
    return DescentRow(family, n, tuple(descent_histogram(n, family, workers)))
