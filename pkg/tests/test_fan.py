from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import hilbert_oracle
from toric_horo.errors import FanError, NotInSupport, OriginError
from toric_horo.fan import (
    Fan,
    dual_cone,
    fan_from_polytope,
    hilbert_basis,
    is_complete,
    is_polytopal,
    locate,
    make_cone,
    validate_fan,
)
from toric_horo.polytope import dilate, hull
from toric_horo.sampling import random_qvecs

E1, E2 = (1, 0), (0, 1)


def gens(cone):
    return set(cone.generators)


# --- fan of a polytope ----------------------------------------------------


def test_square_fan_has_nine_cones(square_fan):
    dims = [c.dim for c in square_fan.cones]
    assert dims.count(0) == 1 and dims.count(1) == 4 and dims.count(2) == 4
    assert {c.generators[0] for c in square_fan.rays()} == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


def test_asymquad_rays_are_primitive(asymquad):
    F = fan_from_polytope(asymquad)
    assert {c.generators[0] for c in F.rays()} == {(1, 0), (0, 1), (-1, 0), (0, -1)}


def test_fan_needs_interior_origin():
    with pytest.raises(OriginError):
        fan_from_polytope(hull([(0, 0), (1, 0), (0, 1)]))


@pytest.mark.parametrize("name", ["square", "asymquad", "simplex2", "cube3", "octa3", "pyramid3"])
def test_cone_face_dimension_shift(polytopes, name):
    P = polytopes[name]
    F = fan_from_polytope(P)
    assert len(F.cone_to_face) == len(P.proper_faces())
    assert len(set(F.cone_to_face.values())) == len(P.proper_faces())
    for cid, fid in F.cone_to_face.items():
        assert F.cones[cid].dim == P.faces[fid].dim + 1
    assert validate_fan(F).valid and is_complete(F)


def test_fan_is_scale_invariant(asymquad):
    assert fan_from_polytope(dilate(asymquad, Q(7, 3))) == fan_from_polytope(asymquad)


# --- validation and completeness -----------------------------------------


def test_overlapping_quadrants_invalid():
    F = Fan.generated_by([[E1, E2], [(1, 1), (-1, 0)]], 2)
    report = validate_fan(F)
    assert not report.valid and report.violations


def test_fulton_valid_and_complete(fulton):
    assert validate_fan(fulton).valid
    assert is_complete(fulton)
    assert [sum(c.dim == d for c in fulton.cones) for d in range(4)] == [1, 8, 12, 6]


def test_single_quadrant_incomplete():
    assert not is_complete(Fan.generated_by([[E1, E2]], 2))


def test_incomplete_on_invalid_raises():
    with pytest.raises(FanError):
        is_complete(Fan.generated_by([[E1, E2], [(1, 1), (-1, 0)]], 2))


# --- locate ---------------------------------------------------------------


def test_locate_examples(square_fan):
    assert gens(locate(square_fan, (3, 2))) == {(1, 1), (1, -1)}
    assert gens(locate(square_fan, (1, 1))) == {(1, 1)}
    assert locate(square_fan, (0, 0)).dim == 0


def test_locate_outside_support():
    with pytest.raises(NotInSupport):
        locate(Fan.generated_by([[E1, E2]], 2), (-1, -1))


@pytest.mark.parametrize("name", ["square", "asymquad", "simplex2", "cube3", "pyramid3"])
def test_locate_partitions(polytopes, name):
    F = fan_from_polytope(polytopes[name])
    n = F.dim
    # include boundary-heavy directions: small integers hit walls often
    us = random_qvecs(11, 500, n, nonzero=True) + random_qvecs(12, 500, n, bound=2, max_den=1, nonzero=True)
    for u in us:
        hits = [c for c in F.cones if c.contains_in_relint(u)]
        assert len(hits) == 1
        assert locate(F, u) == hits[0]


# --- dual cones -----------------------------------------------------------


def test_dual_cone_examples():
    assert gens(dual_cone(make_cone([E1, E2]))) == {E1, E2}
    assert gens(dual_cone(make_cone([(1, 0), (1, 2)]))) == {(0, 1), (2, -1)}
    zero_dual = dual_cone(make_cone([], n=2))
    assert zero_dual.lineality_dim == 2 and not zero_dual.generators


small = st.integers(-3, 3)
vec3 = st.tuples(small, small, small).filter(any)


@settings(max_examples=60, deadline=None)
@given(st.lists(vec3, min_size=1, max_size=4))
def test_biduality(vs):
    sigma = make_cone(vs)
    assert dual_cone(dual_cone(sigma)) == sigma


def test_biduality_on_corpus_fans(fixtures):
    for obj in fixtures.values():
        F = obj if isinstance(obj, Fan) else fan_from_polytope(obj)
        for sigma in F.cones:
            assert dual_cone(dual_cone(sigma)) == sigma.with_id(None)


# --- Hilbert bases --------------------------------------------------------


def test_hilbert_smooth_quadrant():
    assert hilbert_basis(make_cone([E1, E2])).elements == (E2, E1)  # graded lex


def test_hilbert_singular_cone():
    hb = hilbert_basis(make_cone([(0, 1), (2, -1)]))
    assert set(hb.elements) == {(0, 1), (1, 0), (2, -1)}


def test_hilbert_full_plane():
    hb = hilbert_basis(make_cone([], [E1, E2]))
    assert hb.elements == ()
    assert set(hb.lineality_generators) == {(1, 0), (-1, 0), (0, 1), (0, -1)}


def test_hilbert_halfplane_with_ray():
    hb = hilbert_basis(make_cone([E1], [E2]))
    assert hb.elements == (E1,)
    assert set(hb.lineality_generators) == {(0, 1), (0, -1)}


@pytest.mark.parametrize("rays", [
    [(1, 0), (1, 3)], [(1, 2), (3, -1)], [(2, 1), (-1, 3)], [(1, 1, 0), (1, 0, 1), (0, 1, 1)],
    [(1, 0, 0), (0, 1, 0), (1, 1, 2)],
])
def test_hilbert_against_oracle(rays):
    C = make_cone(rays)
    generates, minimal = hilbert_oracle(C, list(hilbert_basis(C).elements))
    assert generates and minimal


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(small, small).filter(any), min_size=1, max_size=3))
def test_hilbert_random_plane_cones(vs):
    C = make_cone(vs)
    hb = hilbert_basis(C)
    generates, minimal = hilbert_oracle(C, hb.all_generators())
    assert generates and minimal


def test_hilbert_dual_cones_of_corpus(fixtures):
    for name in ("square", "asymquad", "simplex2", "cube3"):
        for sigma in fan_from_polytope(fixtures[name]).cones:
            C = dual_cone(sigma)
            generates, minimal = hilbert_oracle(C, hilbert_basis(C).all_generators())
            assert generates and minimal


# --- polytopality ---------------------------------------------------------


def test_fulton_not_coplanar(fulton):
    rep = is_polytopal(fulton)
    assert rep.coplanarity_feasible is False
    assert rep.strictly_convex_feasible is False


def test_square_fan_polytopal(square_fan):
    rep = is_polytopal(square_fan)
    assert rep.coplanarity_feasible and rep.strictly_convex_feasible
    assert rep.witness_fan_matches
    assert len(set(rep.heights.values())) == 1  # equal heights: a dilated square


def test_quadrant_fan_polytopal():
    F = Fan.generated_by([[E1, E2], [E2, (-1, 0)], [(-1, 0), (0, -1)], [(0, -1), E1]], 2)
    rep = is_polytopal(F)
    assert rep.coplanarity_feasible and rep.strictly_convex_feasible
    assert set(rep.witness.vertices) == {tuple(rep.heights[E1] * a for a in r) for r in [E1, E2, (-1, 0), (0, -1)]}
    assert fan_from_polytope(rep.witness) == F


def test_polytopal_rejects_incomplete():
    with pytest.raises(FanError):
        is_polytopal(Fan.generated_by([[E1, E2]], 2))


def test_pentagon_fan_polytopal():
    F = Fan.generated_by([[E1, (1, 1)], [(1, 1), E2], [E2, (-1, 0)], [(-1, 0), (0, -1)], [(0, -1), E1]], 2)
    rep = is_polytopal(F)
    assert rep.coplanarity_feasible and rep.strictly_convex_feasible and rep.witness_fan_matches
