"""Exact integer linear algebra: rank over Q by fraction-free elimination."""

from __future__ import annotations

from math import gcd
from typing import Mapping, Sequence


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix given as a list of rows.

    Bareiss elimination keeps every intermediate entry an integer (each
    division is exact), so no fractions and no floating point are involved.
    """
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == len(a):
            break
        piv = None
        # prefer a unit pivot: keeps entries small on boundary matrices
        for r in range(rank, len(a)):
            v = a[r][col]
            if v:
                if piv is None:
                    piv = r
                if v in (1, -1):
                    piv = r
                    break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        prow = a[rank]
        for r in range(rank + 1, len(a)):
            row = a[r]
            f = row[col]
            if f:
                for c in range(col + 1, ncols):
                    row[c] = (p * row[c] - f * prow[c]) // prev
            else:
                for c in range(col + 1, ncols):
                    row[c] = (p * row[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def sparse_rank(entries: Mapping[tuple[int, int], int], nrows: int, ncols: int) -> int:
    """Rank of a sparse integer matrix given as {(row, col): value}.

    Each reduction step is the integer combination p*row - f*pivot_row,
    followed by division by the row content, so entries stay small.
    """
    rows: dict[int, dict[int, int]] = {}
    for (r, c), v in entries.items():
        if v:
            rows.setdefault(r, {})[c] = v
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows.values():
        row = dict(row)
        while row:
            col = min(row)
            prow = pivots.get(col)
            if prow is None:
                pivots[col] = row
                rank += 1
                break
            p, f = prow[col], row[col]
            new = {}
            for c in set(row) | set(prow):
                v = p * row.get(c, 0) - f * prow.get(c, 0)
                if v:
                    new[c] = v
            row = _primitive(new)
    return rank


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row
