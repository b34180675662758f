"""Brute-force double description for small polyhedral cones.

Converts between the two descriptions of a cone in ``Q^n``:

* H-form: inequalities ``<a, x> >= 0`` plus equations ``<e, x> = 0``;
* V-form: extreme rays plus a basis of the lineality space.

Extreme rays are found by enumerating every set of ``d - 1`` inequalities
(``d`` the dimension of the pointed part) whose tight set is a line and
keeping the half-lines that satisfy all inequalities.  This is exponential
but exact and transparent, which is what desk-scale inputs need.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .linalg import dot, kernel, primitive, rank, row_basis


def _ints_to_q(v):
    return tuple(Fraction(a) for a in v)


def extreme_rays(inequalities: Sequence[Sequence], equations: Sequence[Sequence], n: int):
    """V-form of ``{x : A x >= 0, E x = 0}``.

    Returns ``(rays, lineality)``: sorted primitive integral extreme rays of
    the cone modulo its lineality space, and a basis of that space.  The rays
    are chosen orthogonal to the lineality space so they are canonical.
    """
    A = [tuple(Fraction(a) for a in row) for row in inequalities]
    E = [tuple(Fraction(a) for a in row) for row in equations]
    lineality = kernel(A + E, ncols=n) if (A or E) else kernel([], ncols=n)
    lineality = row_basis(lineality)
    # pointed part lives in {E x = 0} ∩ lineality^⊥
    fixed = E + lineality
    d = n - (rank(fixed) if fixed else 0)
    if d <= 0:
        return [], lineality
    rays = set()
    for subset in combinations(range(len(A)), d - 1):
        rows = fixed + [A[i] for i in subset]
        if rows and rank(rows) != n - 1:
            continue
        ker = kernel(rows, ncols=n)
        if len(ker) != 1:
            continue
        r = ker[0]
        for cand in (r, tuple(-a for a in r)):
            if all(dot(a, cand) >= 0 for a in A):
                rays.add(primitive(cand))
    return sorted(rays), lineality


def facet_description(rays: Sequence[Sequence], lineality: Sequence[Sequence], n: int):
    """H-form of ``cone(rays) + span(lineality)``.

    Returns ``(inequalities, equations)``: irredundant primitive integral
    facet normals ``a`` (with ``<a, x> >= 0`` on the cone, taken orthogonal to
    the equations) and a basis of the equations of the linear span.
    """
    gens = [_ints_to_q(r) for r in rays]
    lin = [_ints_to_q(v) for v in lineality]
    # the dual cone {a : <a, r> >= 0, <a, l> = 0} has the facet normals as
    # extreme rays and the orthogonal complement of the span as lineality
    normals, eqs = extreme_rays(gens, lin, n)
    return normals, [primitive(e) for e in eqs]
