import pytest

from utils.complex_core import from_maximal_faces, from_minimal_nonfaces, full_simplex, simplex_boundary
from utils.errors import InputError
from utils.homology import Field, boundary_matrix, euler_characteristic, is_homology_sphere_like, reduced_betti


@pytest.mark.parametrize("field", [Field.GF2, Field.Q])
def test_spheres(field, four_cycle, sphere_2, octahedron_boundary):
    assert reduced_betti(four_cycle, field).nonzero() == {1: 1}
    assert reduced_betti(sphere_2, field).nonzero() == {2: 1}
    assert reduced_betti(octahedron_boundary, field).nonzero() == {2: 1}
    assert reduced_betti(from_minimal_nonfaces(2, [[0, 1]]), field).nonzero() == {0: 1}


def test_void_complex_has_homology_in_degree_minus_one():
    assert reduced_betti(from_maximal_faces(2, [[]])).nonzero() == {-1: 1}


def test_simplex_is_acyclic():
    assert reduced_betti(full_simplex(4), Field.Q).is_zero()


def test_projective_plane_sees_the_field(rp2):
    assert reduced_betti(rp2, Field.GF2).nonzero() == {1: 1, 2: 1}
    assert reduced_betti(rp2, Field.Q).is_zero()


def test_boundary_on_vertices_is_all_ones():
    assert boundary_matrix(simplex_boundary(3), 0).to_bits() == [[1, 1, 1]]


def test_boundary_signs_over_q():
    matrix = boundary_matrix(full_simplex(2), 1, Field.Q)
    assert matrix.rows == 2 and matrix.cols == 1
    assert sorted(matrix.column(0)) == [-1, 1]


def test_boundary_degree_out_of_range(four_cycle):
    with pytest.raises(InputError):
        boundary_matrix(four_cycle, 2)


def test_sphere_like(four_cycle):
    assert is_homology_sphere_like(four_cycle, Field.GF2, 1)
    assert not is_homology_sphere_like(four_cycle, Field.GF2, 0)


def test_euler_characteristic_matches_betti(four_cycle, rp2, sphere_2):
    for k in (four_cycle, rp2, sphere_2):
        assert euler_characteristic(k) == reduced_betti(k, Field.Q).euler_characteristic()
    assert euler_characteristic(four_cycle) == -1
