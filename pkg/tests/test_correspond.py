import pytest

from toric_horo.correspond import (
    boundary_complex,
    moment_image_complex,
    sample_direction,
    verify_correspondence,
)
from toric_horo.errors import OriginError
from toric_horo.fan import fan_from_polytope
from toric_horo.polytope import hull


def test_boundary_complex_square(square):
    assert boundary_complex(square).graded_counts() == {0: 4, 1: 4}


def test_boundary_complex_cube(cube):
    assert boundary_complex(cube).graded_counts() == {0: 6, 1: 12, 2: 8}


def test_boundary_complex_triangle(polytopes):
    bc = boundary_complex(polytopes["simplex2"])
    assert len(bc.cells) == 6 and bc.graded_counts() == {0: 3, 1: 3}


def test_moment_image_cells(square, cube):
    assert moment_image_complex(square).graded_counts() == {0: 4, 1: 4}
    assert moment_image_complex(cube).graded_counts() == {0: 6, 1: 12, 2: 8}


def test_closure_is_graded_partial_order(cube):
    bc = boundary_complex(cube)
    rel = set(bc.closure_relation)
    dims = bc.dims()
    for a, b in rel:
        assert dims[a] < dims[b]
        assert (b, a) not in rel
    for a, b in rel:
        for c, d in rel:
            if b == c:
                assert (a, d) in rel


def test_origin_required():
    with pytest.raises(OriginError):
        boundary_complex(hull([(0, 0), (1, 0), (0, 1)]))


def test_sample_direction_in_relative_interior(polytopes):
    for P in polytopes.values():
        fan = fan_from_polytope(P)
        for F in P.proper_faces():
            assert fan.cone_of_face(F).contains_in_relint(sample_direction(P, F))


@pytest.mark.parametrize("name", ["square", "cross2", "asymquad", "simplex2", "cube3", "octa3", "pyramid3"])
def test_correspondence_passes(polytopes, name):
    P = polytopes[name]
    rep = verify_correspondence(P)
    assert rep.passed
    assert rep.bijective and all(rep.dim_checks.values()) and rep.incidence_check
    assert all(rep.classifier_checks.values()) and rep.moment_image_match
    assert sum(rep.cell_counts["boundary"].values()) == len(P.polar.proper_faces())


def test_correspondence_with_offset(asymquad):
    assert verify_correspondence(asymquad, offset=(3, -2)).passed


def test_report_json_shape(square):
    out = verify_correspondence(square).to_json()
    assert out["passed"] is True
    assert set(out["checks"]) == {"bijection", "dimensions", "incidence", "classifier_coherence", "moment_image"}
    assert len(out["bijection"]) == 8
