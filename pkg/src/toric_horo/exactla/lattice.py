"""Integer lattice algebra: Smith normal form, saturation, complements."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import IntegralityError


@dataclass(frozen=True)
class LatticeBasis:
    vectors: tuple  # tuple[tuple[int, ...], ...]
    rank: int

    @classmethod
    def of(cls, vectors):
        vs = tuple(tuple(int(a) for a in v) for v in vectors)
        return cls(vs, len(vs))


def _as_int_matrix(M) -> list[list[int]]:
    out = []
    for row in M:
        r = []
        for a in row:
            a = Fraction(a)
            if a.denominator != 1:
                raise IntegralityError(f"entry {a} is not an integer")
            r.append(a.numerator)
        out.append(r)
    return out


def smith_normal_form(M: Sequence[Sequence]):
    """Smith normal form of an integer matrix.

    Returns ``(U, S, V)`` with ``U @ M @ V == S``, ``U`` and ``V`` unimodular
    and ``S`` diagonal with nonnegative entries, each dividing the next.
    All three are lists of lists of ints.
    """
    U, S, V, _ = _snf_with_inverse(M)
    return U, S, V


def _snf_with_inverse(M):
    """As :func:`smith_normal_form`, additionally returning ``V^{-1}``."""
    A = _as_int_matrix(M)
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(src, dst, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):  # col_dst += q * col_src
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        # V' = V E with E = I + q e_src e_dst^T, so V'^{-1} = (I - q e_src e_dst^T) V^{-1}
        Vinv[src] = [a - q * b for a, b in zip(Vinv[src], Vinv[dst])]

    t = 0
    while t < min(m, n):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j] != 0]
        if not entries:
            break
        _, pi, pj = min(entries)
        swap_rows(t, pi)
        swap_cols(t, pj)
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                    None,
                )
                if bad is not None:
                    add_row(bad[0], t, 1)
                    done = False
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, A, V, Vinv


def is_smith_normal_form(S) -> bool:
    m = len(S)
    n = len(S[0]) if m else 0
    for i in range(m):
        for j in range(n):
            if i != j and S[i][j] != 0:
                return False
    diag = [S[i][i] for i in range(min(m, n))]
    if any(d < 0 for d in diag):
        return False
    for a, b in zip(diag, diag[1:]):
        if a == 0 and b != 0:
            return False
        if a != 0 and b % a:
            return False
    return True


def saturation_and_complement(vectors: Sequence[Sequence], n: int):
    """Split ``Z^n`` along the saturation of the lattice spanned by ``vectors``.

    Returns ``(saturation, complement)``: integral vectors whose union is a
    basis of ``Z^n`` and whose first part is a basis of the saturation
    ``span_Q(vectors) ∩ Z^n``.
    """
    if not vectors:
        std = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        return [], std
    rows = _as_int_matrix(vectors)
    if any(len(r) != n for r in rows):
        raise ValueError("vector length differs from the ambient dimension")
    _, S, _, Vinv = _snf_with_inverse(rows)
    r = sum(1 for i in range(min(len(S), n)) if S[i][i] != 0)
    basis = [tuple(row) for row in Vinv]
    return basis[:r], basis[r:]


def saturate(vectors, n: int) -> LatticeBasis:
    return LatticeBasis.of(saturation_and_complement(vectors, n)[0])


def complement_basis(L, n: int) -> LatticeBasis:
    """Integral vectors completing a basis of the saturation of ``L`` to one of ``Z^n``.

    ``L`` may be a :class:`LatticeBasis` or any sequence of integral vectors;
    a non-saturated input is saturated first.
    """
    vectors = L.vectors if isinstance(L, LatticeBasis) else L
    vectors = [v for v in vectors if any(v)]
    return LatticeBasis.of(saturation_and_complement(vectors, n)[1])
