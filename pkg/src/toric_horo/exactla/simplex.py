"""Phase-one simplex over the rationals (Bland's rule), for LP feasibility."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def nonnegative_solution(A: Sequence[Sequence], b: Sequence) -> Optional[tuple]:
    """Find ``x >= 0`` with ``A x = b`` or return ``None``.

    Standard phase one: one artificial variable per row, minimise their sum.
    Bland's smallest-index rule guarantees termination.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for row, rhs in zip(A, b):
        row = [Fraction(a) for a in row]
        rhs = Fraction(rhs)
        if rhs < 0:
            row, rhs = [-a for a in row], -rhs
        rows.append(row + [Fraction(int(i == len(rows))) for i in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    total = n + m
    # reduced costs of the phase-one objective: minimise sum of artificials
    cost = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    for r in rows:
        cost = [c - a for c, a in zip(cost, r)]

    while True:
        entering = next((j for j in range(total) if cost[j] < 0), None)
        if entering is None:
            break
        leaving, best = None, None
        for i, r in enumerate(rows):
            if r[entering] > 0:
                ratio = r[-1] / r[entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    leaving, best = i, ratio
        if leaving is None:  # unbounded; cannot happen for a phase-one objective bounded by 0
            break
        piv = rows[leaving][entering]
        rows[leaving] = [a / piv for a in rows[leaving]]
        for i in range(m):
            if i != leaving and rows[i][entering] != 0:
                f = rows[i][entering]
                rows[i] = [a - f * p for a, p in zip(rows[i], rows[leaving])]
        f = cost[entering]
        cost = [c - f * p for c, p in zip(cost, rows[leaving])]
        basis[leaving] = entering

    if -cost[-1] != 0:
        return None
    x = [Fraction(0)] * total
    for i, j in enumerate(basis):
        x[j] = rows[i][-1]
    return tuple(x[:n])
