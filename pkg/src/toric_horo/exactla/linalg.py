"""Exact rational linear algebra.

Vectors are tuples of :class:`fractions.Fraction` and matrices are tuples of
such row tuples.  Nothing in here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from ..errors import DimensionError

QVector = tuple  # tuple[Fraction, ...]
QMatrix = tuple  # tuple[QVector, ...]


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, an int or a Fraction into a Fraction.

    Floats are rejected: they would silently import rounding error.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def qvec(values: Iterable) -> QVector:
    return tuple(parse_rational(v) for v in values)


def qmat(rows: Iterable[Iterable]) -> QMatrix:
    out = tuple(qvec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionError("matrix rows have unequal lengths")
    return out


def zero(n: int) -> QVector:
    return (Fraction(0),) * n


def identity(n: int) -> QMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch {len(u)} != {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> QVector:
    return tuple(Fraction(a) + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> QVector:
    return tuple(Fraction(a) - b for a, b in zip(u, v))


def scale(s, v: Sequence) -> QVector:
    s = Fraction(s)
    return tuple(s * a for a in v)


def transpose(A: Sequence[Sequence]) -> QMatrix:
    return tuple(zip(*A)) if A else ()


def matvec(A: Sequence[Sequence], x: Sequence) -> QVector:
    return tuple(dot(row, x) for row in A)


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> QMatrix:
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    den = reduce(lcm, (Fraction(a).denominator for a in row), 1)
    return [int(Fraction(a) * den) for a in row]


def _normalize_int_row(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        row = [a // g for a in row]
    return row


def _rref(rows: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free reduced row echelon form.

    Each row is scaled to integers up front; elimination then uses only
    integer cross-multiplication followed by division by the row gcd.
    Returns the nonzero rows and their pivot columns.
    """
    work = [_integer_row(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        p = work[r][col]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = _normalize_int_row([p * a - f * b for a, b in zip(work[i], work[r])])
        work[r] = _normalize_int_row(work[r])
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    return len(_rref(A)[1])


def kernel(A: Sequence[Sequence], ncols: Optional[int] = None) -> list[QVector]:
    """Basis of {x : A x = 0}, one vector per free column."""
    if not A:
        if ncols is None:
            raise DimensionError("ncols required for an empty matrix")
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    n = len(A[0])
    R, pivots = _rref(A)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = Fraction(-row[f], row[p])
        basis.append(tuple(x))
    return basis


def rank_and_solve(A: Sequence[Sequence], b: Sequence) -> tuple[Optional[QVector], list[QVector]]:
    """Solve ``A x = b`` exactly.

    Returns ``(x, kernel)`` where ``x`` is one solution (free variables set to
    zero) or ``None`` when the system is inconsistent, and ``kernel`` is a basis
    of the null space of ``A``.
    """
    if not A:
        raise DimensionError("empty coefficient matrix")
    n = len(A[0])
    if any(len(row) != n for row in A):
        raise DimensionError("coefficient matrix is not rectangular")
    if len(b) != len(A):
        raise DimensionError(f"rhs has length {len(b)}, expected {len(A)}")
    augmented = [tuple(row) + (b_i,) for row, b_i in zip(A, b)]
    R, pivots = _rref(augmented)
    ker = kernel(A)
    if n in pivots:
        return None, ker
    x = [Fraction(0)] * n
    for row, p in zip(R, pivots):
        x[p] = Fraction(row[n], row[p])
    return tuple(x), ker


def solve(A, b) -> Optional[QVector]:
    return rank_and_solve(A, b)[0]


def row_basis(vectors: Sequence[Sequence]) -> list[QVector]:
    """A basis (reduced, fraction-free scaled) of the span of ``vectors``."""
    if not vectors:
        return []
    R, _ = _rref(vectors)
    return [tuple(Fraction(a) for a in row) for row in R]


def det(A: Sequence[Sequence]) -> Fraction:
    """Determinant by Bareiss elimination on the integer-scaled matrix."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    dens = [reduce(lcm, (Fraction(a).denominator for a in r), 1) for r in A]
    M = [[int(Fraction(a) * d) for a in r] for r, d in zip(A, dens)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    total_den = reduce(lambda a, b: a * b, dens, 1)
    return Fraction(sign * M[n - 1][n - 1], total_den)


def inverse(A: Sequence[Sequence]) -> QMatrix:
    n = len(A)
    cols = []
    for j in range(n):
        e = tuple(Fraction(int(i == j)) for i in range(n))
        x = solve(A, e)
        if x is None:
            raise ZeroDivisionError("singular matrix")
        cols.append(x)
    return transpose(cols)


def orthogonal_component(c: Sequence, span: Sequence[Sequence]) -> QVector:
    """Component of ``c`` orthogonal to the span of ``span`` (exact Gram solve)."""
    c = tuple(Fraction(a) for a in c)
    basis = row_basis(span)
    if not basis:
        return c
    gram = tuple(tuple(dot(u, v) for v in basis) for u in basis)
    coeffs = solve(gram, tuple(dot(u, c) for u in basis))
    proj = zero(len(c))
    for a, u in zip(coeffs, basis):
        proj = add(proj, scale(a, u))
    return sub(c, proj)


def in_span(v: Sequence, span: Sequence[Sequence]) -> bool:
    if is_zero(v):
        return True
    if not span:
        return False
    return rank(list(span) + [v]) == rank(span)


def primitive(v: Sequence) -> tuple[int, ...]:
    """The primitive integral vector on the ray through a nonzero rational ``v``."""
    ints = _integer_row([Fraction(a) for a in v])
    g = reduce(gcd, ints, 0)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(a // g for a in ints)


def integral(v: Sequence) -> tuple[int, ...]:
    out = []
    for a in v:
        a = Fraction(a)
        if a.denominator != 1:
            raise ValueError(f"{a} is not an integer")
        out.append(a.numerator)
    return tuple(out)
