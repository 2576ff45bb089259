"""Fraction-free (Bareiss) row echelon form over an integral domain."""

from __future__ import annotations

from typing import Callable, Sequence, TypeVar

T = TypeVar("T")


def bareiss_echelon(
    rows: Sequence[Sequence[T]],
    divexact: Callable[[T, T], T],
    one: T,
) -> tuple[list[list[T]], list[int]]:
    """Return (echelon rows, pivot columns).

    One-step Bareiss elimination with column skipping.  Every entry stays a
    minor of the input, so each division by the previous pivot is exact;
    ``divexact`` is expected to raise if that ever fails.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    prev = one
    r = 0
    pivots: list[int] = []
    for col in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][col]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv_row = m[r]
        piv = piv_row[col]
        for i in range(r + 1, len(m)):
            row = m[i]
            lead = row[col]
            for j in range(col + 1, ncols):
                val = piv * row[j]
                if lead and piv_row[j]:
                    val = val - lead * piv_row[j]
                row[j] = divexact(val, prev) if val else val
            row[col] = row[col] * 0
        prev = piv
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[T]], divexact: Callable[[T, T], T], one: T) -> int:
    return len(bareiss_echelon(rows, divexact, one)[1])
