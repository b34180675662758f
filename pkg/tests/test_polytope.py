from fractions import Fraction as Q
from functools import reduce
from math import atan2, gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_horo.errors import DegenerateError, FaceRangeError, OriginError
from toric_horo.exactla import dot
from toric_horo.polytope import (
    dilate,
    dual_face,
    has_primitive_vertex,
    hull,
    normalize,
    polar,
    volume,
)

SQUARE = {(1, 1), (1, -1), (-1, 1), (-1, -1)}
CROSS = {(1, 0), (-1, 0), (0, 1), (0, -1)}


def vset(P):
    return set(P.vertices)


# random polytopes with the origin inside: a small cross-polytope plus random points
coord = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def origin_polytopes(n):
    base = [tuple(Q(s, 2) if i == k else 0 for i in range(n)) for k in range(n) for s in (1, -1)]
    pts = st.lists(st.tuples(*[coord] * n), min_size=0, max_size=6 if n == 2 else 4)
    return pts.map(lambda extra: hull(base + list(extra)))


any_polytope = st.one_of(origin_polytopes(2), origin_polytopes(3))


def shoelace(vertices):
    cx = sum(v[0] for v in vertices) / len(vertices)
    cy = sum(v[1] for v in vertices) / len(vertices)
    vs = sorted(vertices, key=lambda v: atan2(v[1] - cy, v[0] - cx))
    area = sum(vs[i][0] * vs[(i + 1) % len(vs)][1] - vs[(i + 1) % len(vs)][0] * vs[i][1] for i in range(len(vs)))
    return abs(Q(area)) / 2


# --- hull -----------------------------------------------------------------


def test_hull_drops_interior_point():
    P = hull(list(SQUARE) + [(0, 0)])
    assert vset(P) == SQUARE
    assert len(P.facets) == 4
    assert len(P.faces_of_dim(1)) == 4


def test_hull_standard_triangle():
    P = hull([(0, 0), (1, 0), (0, 1)])
    assert len(P.vertices) == 3 and len(P.facets) == 3
    assert not P.origin_interior


def test_hull_collinear_is_degenerate():
    with pytest.raises(DegenerateError) as info:
        hull([(0, 0), (1, 1), (2, 2)])
    assert info.value.affine_dim == 1


def test_facets_are_primitive_and_tight(polytopes):
    for P in polytopes.values():
        for k, (a, b) in enumerate(P.facets):
            assert all(isinstance(c, int) or c.denominator == 1 for c in a)
            assert reduce(gcd, (int(c) for c in a), 0) == 1
            vals = [dot(a, v) for v in P.vertices]
            assert max(vals) == b
            on = [i for i, x in enumerate(vals) if x == b]
            assert set(on) == set(P.facet_vertex_ids(k))


def test_face_lattice_bounds(cube):
    L = cube.face_lattice
    assert L.bottom.dim == -1 and L.top.dim == 3
    assert cube.f_vector() == [8, 12, 6]


@pytest.mark.parametrize("name", ["square", "cross2", "asymquad", "simplex2", "cube3", "octa3", "pyramid3"])
def test_euler_relation(polytopes, name):
    P = polytopes[name]
    n = P.ambient_dim
    f = P.f_vector()
    assert sum((-1) ** d * f[d] for d in range(n)) == 1 - (-1) ** n


# --- polar ----------------------------------------------------------------


def test_polar_of_square_is_cross(square):
    assert vset(polar(square)) == CROSS


def test_polar_of_cross_is_square(polytopes):
    assert vset(polar(polytopes["cross2"])) == SQUARE


def test_polar_of_asymquad(asymquad):
    Q_ = polar(asymquad)
    # facets x/2 + y <= 1 etc. give polar vertices -a/b
    assert vset(Q_) == {(Q(-1, 2), -1), (Q(-1, 2), 1), (1, -1), (1, 1)}
    assert polar(Q_) == asymquad


def test_polar_requires_origin():
    with pytest.raises(OriginError):
        polar(hull([(0, 0), (1, 0), (0, 1)]))


@settings(max_examples=40, deadline=None)
@given(any_polytope)
def test_bipolar_random(P):
    assert polar(polar(P)) == P


@settings(max_examples=40, deadline=None)
@given(any_polytope)
def test_polar_inequality_holds(P):
    for y in polar(P).vertices:
        assert all(dot(x, y) >= -1 for x in P.vertices)


# --- dual faces -----------------------------------------------------------


def test_dual_face_of_vertex(square):
    F = square.face([square.vertices.index((1, 1))])
    E = dual_face(square, F)
    Q_ = square.polar
    assert {Q_.vertices[i] for i in E.vertex_ids} == {(-1, 0), (0, -1)}
    assert E.dim == 1


def test_dual_face_of_facet(square):
    ids = [i for i, v in enumerate(square.vertices) if v[0] == 1]
    E = dual_face(square, square.face(ids))
    assert [square.polar.vertices[i] for i in E.vertex_ids] == [(-1, 0)]


def test_dual_face_improper(square):
    with pytest.raises(FaceRangeError):
        dual_face(square, square.face_lattice.top)
    with pytest.raises(FaceRangeError):
        dual_face(square, square.face_lattice.bottom)


@settings(max_examples=25, deadline=None)
@given(any_polytope)
def test_dual_face_dimensions_and_reversal(P):
    n = P.ambient_dim
    faces = P.proper_faces()
    duals = {F.id: dual_face(P, F) for F in faces}
    assert len({E.id for E in duals.values()}) == len(faces)
    for F in faces:
        assert F.dim + duals[F.id].dim == n - 1
    for F in faces:
        for G in faces:
            if set(F.vertex_ids) < set(G.vertex_ids):
                assert set(duals[G.id].vertex_ids) < set(duals[F.id].vertex_ids)


# --- normalize ------------------------------------------------------------


def test_normalize_half_square():
    lam, P = normalize(hull([(Q(s, 2), Q(t, 2)) for s in (1, -1) for t in (1, -1)]))
    assert lam == 2 and vset(P) == SQUARE and has_primitive_vertex(P)


def test_normalize_square_is_identity(square):
    lam, P = normalize(square)
    assert lam == 1 and P == square


def test_normalize_shrinks():
    lam, P = normalize(hull([(2, 0), (-2, 0), (0, 2), (0, -2)]))
    assert lam == Q(1, 2) and vset(P) == CROSS


def test_normalize_without_primitive_vertex():
    # integral scale exists but every vertex of the minimal dilate is imprimitive
    lam, P = normalize(hull([(2, 0), (0, 3), (-2, 0), (0, -3)]))
    assert lam == 1
    assert not has_primitive_vertex(P)


@settings(max_examples=30, deadline=None)
@given(any_polytope)
def test_normalize_is_minimal_integral(P):
    lam, N = normalize(P)
    assert all(c.denominator == 1 for v in N.vertices for c in map(Q, v))
    # no proper fraction of lam stays integral
    g = reduce(gcd, (int(c) for v in N.vertices for c in v), 0)
    assert g == 1


# --- volume ---------------------------------------------------------------


def test_volume_examples(square, cube, polytopes):
    assert volume(square) == 4
    assert volume(cube) == 8
    assert volume(hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])) == Q(1, 6)
    assert volume(hull([(0, 0), (1, 0), (0, 1)])) == Q(1, 2)
    assert volume(polytopes["octa3"]) == Q(4, 3)
    assert volume(polytopes["pyramid3"]) == 4  # base 4, height 3


@settings(max_examples=40, deadline=None)
@given(origin_polytopes(2))
def test_volume_matches_shoelace(P):
    assert volume(P) == shoelace(P.vertices)


@settings(max_examples=20, deadline=None)
@given(any_polytope, st.fractions(min_value=Q(1, 3), max_value=3, max_denominator=4))
def test_volume_scales(P, lam):
    assert volume(dilate(P, lam)) == lam ** P.ambient_dim * volume(P)
