import pytest

from config.config import CORPUS_DIR
from utils.complex_core import from_maximal_faces, from_minimal_nonfaces, simplex_boundary
from utils.gale import point_configuration, polygon_configuration
from utils.polytope import (
    crosspolytope_vertices,
    cube_vertices,
    cyclic_vertices,
    polytope_from_vertices,
    prism_vertices,
    pyramid_vertices,
    simplex_vertices,
)

SQUARE = [[0, 0], [1, 0], [1, 1], [0, 1]]
TRIANGLE = [[0, 0], [1, 0], [0, 1]]


@pytest.fixture
def four_cycle():
    return from_minimal_nonfaces(4, [[0, 2], [1, 3]])


@pytest.fixture
def sphere_2():
    return simplex_boundary(4)


@pytest.fixture
def octahedron_boundary():
    return from_minimal_nonfaces(6, [[0, 1], [2, 3], [4, 5]])


@pytest.fixture
def rp2():
    """Six-vertex real projective plane."""
    faces = [[1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5], [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6]]
    return from_maximal_faces(6, [[v - 1 for v in f] for f in faces])


@pytest.fixture
def square():
    return polytope_from_vertices(SQUARE)


@pytest.fixture
def triangle():
    return polytope_from_vertices(TRIANGLE)


@pytest.fixture
def pyramid():
    return polytope_from_vertices(pyramid_vertices(SQUARE))


@pytest.fixture
def prism():
    return polytope_from_vertices(prism_vertices(TRIANGLE))


@pytest.fixture
def cube():
    return polytope_from_vertices(cube_vertices(3))


@pytest.fixture
def octahedron():
    return polytope_from_vertices(crosspolytope_vertices(3))


@pytest.fixture
def simplex_3():
    return polytope_from_vertices(simplex_vertices(3))


@pytest.fixture
def cyclic_6_4():
    return polytope_from_vertices(cyclic_vertices(6, 4))


@pytest.fixture
def pentagon_rays():
    return polygon_configuration(2)


@pytest.fixture
def hexagon_rays():
    return point_configuration([[1, 0], [1, 2], [-1, 2], [-1, 0], [-1, -2], [1, -2]])


@pytest.fixture
def corpus_dir():
    return CORPUS_DIR
