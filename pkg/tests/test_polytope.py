import pytest

from utils.complex_core import from_minimal_nonfaces, is_flag
from utils.corpus import load_polytopes
from utils.errors import DuplicatePointError, InputError, NotExtremeError
from utils.gale import constellation_complex, gale_diagram, is_flag_configuration
from utils.homology import reduced_betti
from utils.polytope import (
    crosspolytope_vertices,
    cube_vertices,
    cyclic_vertices,
    f_nl,
    face_lattice,
    is_k_neighborly,
    is_pyramid,
    is_simplicial,
    lattice_from_nerve,
    nerve_KP,
    nerve_KQ,
    polygon_vertices,
    polytope_f_vector,
    polytope_from_vertices,
)


def test_square_facets(square):
    assert square.dimension == 2
    assert square.facets == (0b0011, 0b0110, 0b1001, 0b1100)
    assert polytope_f_vector(square) == [1, 4, 4]


def test_square_face_lattice(square):
    lattice = face_lattice(square)
    assert lattice[0] == (0, -1)
    assert lattice[-1] == (0b1111, 2)
    assert len(lattice) == 10


def test_interior_point_is_rejected():
    with pytest.raises(NotExtremeError) as info:
        polytope_from_vertices([[0, 0], [4, 0], [0, 4], [1, 1]])
    assert info.value.index == 3


def test_duplicate_point_is_rejected():
    with pytest.raises(DuplicatePointError):
        polytope_from_vertices([[0, 0], [1, 0], [0, 0]])


def test_lower_dimensional_embedding():
    p = polytope_from_vertices([[0, 0, 5], [1, 0, 5], [0, 1, 5]])
    assert p.ambient_dimension == 3
    assert p.dimension == 2
    assert len(p.facets) == 3


def test_nerve_of_octahedron(octahedron):
    assert nerve_KP(octahedron) == from_minimal_nonfaces(6, [[0, 1], [2, 3], [4, 5]])


def test_facet_nerve_of_cube(cube):
    kq = nerve_KQ(cube)
    assert kq.m == 6
    assert kq.dimension == 2
    assert is_flag(kq)
    assert reduced_betti(kq).nonzero() == {2: 1}


def test_f_nl(square, prism):
    assert f_nl(square) == {(-1, 0): 1, (0, 1): 4, (1, 2): 4}
    assert f_nl(prism) == {(-1, 0): 1, (0, 1): 6, (1, 2): 9, (2, 3): 2, (2, 4): 3}


def test_pyramids(pyramid, triangle, square, simplex_3):
    assert is_pyramid(pyramid) == 4
    assert is_pyramid(triangle) == 0
    assert is_pyramid(simplex_3) == 0
    assert is_pyramid(square) is None


def test_neighborliness(square, cyclic_6_4):
    assert is_k_neighborly(square, 1)
    assert not is_k_neighborly(square, 2)
    assert is_k_neighborly(cyclic_6_4, 2)
    with pytest.raises(InputError):
        is_k_neighborly(square, -1)


def test_cyclic_polytope_counts(cyclic_6_4):
    assert len(cyclic_6_4.facets) == 9
    assert polytope_f_vector(cyclic_6_4) == [1, 6, 15, 18, 9]
    assert is_simplicial(cyclic_6_4)


def test_simplicial(octahedron, cube):
    assert is_simplicial(octahedron)
    assert not is_simplicial(cube)


def test_builders():
    assert crosspolytope_vertices(2) == [[1, 0], [-1, 0], [0, 1], [0, -1]]
    assert cyclic_vertices(3, 2) == [[1, 1], [2, 4], [3, 9]]
    assert len(polytope_from_vertices(polygon_vertices(6)).facets) == 6
    with pytest.raises(InputError):
        cyclic_vertices(3, 2, [1, 2])


def test_facets_away_from_the_origin():
    shifted = polytope_from_vertices([[2, 3], [3, 3], [3, 4], [2, 4]])
    assert shifted.facets == (0b0011, 0b0110, 0b1001, 0b1100)
    assert len(polytope_from_vertices([[5, 5], [6, 5], [5, 6]]).facets) == 3
    cube = polytope_from_vertices([[x + 7, y - 4, z + 2] for x, y, z in cube_vertices(3)])
    assert len(cube.facets) == 6
    assert polytope_f_vector(cube) == [1, 8, 12, 6]


def test_face_lattice_is_determined_by_the_nerve(corpus_dir):
    for name, p in load_polytopes(corpus_dir):
        assert lattice_from_nerve(nerve_KP(p)) == face_lattice(p), name


@pytest.mark.parametrize("k", [1, 2, 3])
def test_neighborliness_bounds_the_dual_dimension(corpus_dir, k):
    for name, p in load_polytopes(corpus_dir):
        delta = constellation_complex(gale_diagram(p))
        assert is_k_neighborly(p, k) == (delta.dimension <= p.m - k - 2), name


def test_pyramids_have_a_zero_gale_point(corpus_dir):
    for name, p in load_polytopes(corpus_dir):
        has_zero = any(all(c == 0 for c in point) for point in gale_diagram(p).points)
        assert (is_pyramid(p) is not None) == has_zero, name


def test_flag_nerve_matches_flag_configuration(corpus_dir):
    for name, p in load_polytopes(corpus_dir):
        if is_simplicial(p):
            assert is_flag(nerve_KP(p)) == is_flag_configuration(gale_diagram(p)), name
