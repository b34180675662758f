"""Exact linear feasibility by Fourier-Motzkin elimination.

A constraint ``(a, b, strict)`` means ``<a, x> > b`` when ``strict`` else
``<a, x> >= b``.  Strict and non-strict constraints are carried separately
through elimination, so the answer is exact for mixed systems.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, NamedTuple, Optional, Sequence


class Constraint(NamedTuple):
    coeffs: tuple
    rhs: Fraction
    strict: bool = False


def geq(coeffs, rhs=0) -> Constraint:
    return Constraint(tuple(Fraction(a) for a in coeffs), Fraction(rhs), False)


def gt(coeffs, rhs=0) -> Constraint:
    return Constraint(tuple(Fraction(a) for a in coeffs), Fraction(rhs), True)


def eq(coeffs, rhs=0) -> list[Constraint]:
    """An equation as a pair of opposite non-strict inequalities."""
    coeffs = tuple(Fraction(a) for a in coeffs)
    return [Constraint(coeffs, Fraction(rhs)), Constraint(tuple(-a for a in coeffs), -Fraction(rhs))]


def _canonical(c: Constraint) -> Constraint:
    # positive rescaling to primitive integers keeps the meaning and lets us dedupe
    vals = list(c.coeffs) + [c.rhs]
    den = reduce(lcm, (v.denominator for v in vals), 1)
    ints = [int(v * den) for v in vals]
    g = reduce(gcd, ints, 0) or 1
    return Constraint(tuple(Fraction(a // g) for a in ints[:-1]), Fraction(ints[-1] // g), c.strict)


def _dedupe(constraints: Iterable[Constraint]) -> list[Constraint]:
    seen: dict = {}
    for c in map(_canonical, constraints):
        key = (c.coeffs, c.rhs)
        # the strict version implies the non-strict one
        seen[key] = seen.get(key, False) or c.strict
    return [Constraint(k[0], k[1], s) for k, s in seen.items()]


def _trivially_violated(c: Constraint) -> bool:
    return c.rhs > 0 or (c.strict and c.rhs == 0)


def _eliminate(system: list[Constraint], k: int) -> list[Constraint]:
    pos = [c for c in system if c.coeffs[k] > 0]
    neg = [c for c in system if c.coeffs[k] < 0]
    out = [c for c in system if c.coeffs[k] == 0]
    for p in pos:
        for q in neg:
            sp, sq = -q.coeffs[k], p.coeffs[k]
            coeffs = tuple(sp * a + sq * b for a, b in zip(p.coeffs, q.coeffs))
            out.append(Constraint(coeffs, sp * p.rhs + sq * q.rhs, p.strict or q.strict))
    reduced = []
    for c in _dedupe(out):
        if all(a == 0 for a in c.coeffs):
            if _trivially_violated(c):
                return [c]
            continue
        reduced.append(c)
    return reduced


def _choose(lower, upper) -> Fraction:
    """A value strictly/weakly inside the bounds, preferring simple numbers."""
    lo = max(lower, default=None)
    hi = min(upper, default=None)
    if lo is None and hi is None:
        return Fraction(0)
    if hi is None:
        v, strict = lo
        if not strict:
            return v
        return Fraction(int(v // 1) + 1)
    if lo is None:
        v, strict = hi
        if not strict:
            return v
        return Fraction(-int((-v) // 1) - 1)
    (lv, ls), (hv, hs) = lo, hi
    if lv == hv:
        return lv
    if not ls:
        return lv
    if not hs:
        return hv
    return (lv + hv) / 2


def fm_solve(constraints: Sequence[Constraint], nvars: int) -> Optional[tuple]:
    """Return a point satisfying every constraint, or ``None`` if infeasible."""
    system = _dedupe(constraints)
    for c in system:
        if len(c.coeffs) != nvars:
            raise ValueError("constraint length differs from the number of variables")
    stages = [system]
    for k in range(nvars - 1, -1, -1):
        if any(all(a == 0 for a in c.coeffs) and _trivially_violated(c) for c in system):
            return None
        system = _eliminate(system, k)
        stages.append(system)
    if any(_trivially_violated(c) for c in system):
        return None

    x = [Fraction(0)] * nvars
    for k in range(nvars):
        stage = stages[nvars - 1 - k]  # the system in which x_0..x_k are live
        lower, upper = [], []
        for c in stage:
            a = c.coeffs[k]
            if a == 0:
                continue
            rest = sum((c.coeffs[i] * x[i] for i in range(k)), Fraction(0))
            bound = (c.rhs - rest) / a
            if a > 0:
                lower.append((bound, c.strict))
            else:
                upper.append((bound, c.strict))
        x[k] = _pick(lower, upper)
    return tuple(x)


def _pick(lower, upper) -> Fraction:
    # among equal values a strict bound is the tighter one
    lo = None
    for v, s in lower:
        if lo is None or v > lo[0] or (v == lo[0] and s):
            lo = (v, s)
    hi = None
    for v, s in upper:
        if hi is None or v < hi[0] or (v == hi[0] and s):
            hi = (v, s)
    return _choose([lo] if lo else [], [hi] if hi else [])


def fm_feasible(constraints: Sequence[Constraint], nvars: int) -> bool:
    return fm_solve(constraints, nvars) is not None


def satisfies(x: Sequence, c: Constraint) -> bool:
    val = sum((Fraction(a) * b for a, b in zip(c.coeffs, x)), Fraction(0))
    return val > c.rhs if c.strict else val >= c.rhs
