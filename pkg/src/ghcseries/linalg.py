"""Minimal exact linear solving over Fraction."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InternalInconsistency


def solve_unique(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction]:
    """Solve rows . x = rhs; the solution must exist and be unique."""
    m = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(rows, rhs)]
    n_rows = len(m)
    n_cols = len(m[0]) - 1 if m else 0
    piv_r = 0
    pivots = []
    for c in range(n_cols):
        pivot = None
        for r in range(piv_r, n_rows):
            if m[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[piv_r], m[pivot] = m[pivot], m[piv_r]
        fp = m[piv_r][c]
        m[piv_r] = [x / fp for x in m[piv_r]]
        for r in range(n_rows):
            if r != piv_r and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[piv_r])]
        pivots.append(c)
        piv_r += 1
    if len(pivots) != n_cols:
        raise InternalInconsistency("linear system is underdetermined")
    for r in range(piv_r, n_rows):
        if m[r][n_cols] != 0:
            raise InternalInconsistency("linear system is inconsistent")
    solution = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        solution[c] = m[r][n_cols]
    return solution
