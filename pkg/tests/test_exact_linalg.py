import random
from fractions import Fraction

import pytest

from utils.errors import DimensionMismatchError, InputError
from utils.exact_linalg import (
    GF2Matrix,
    RationalMatrix,
    affine_rank,
    as_vectors,
    direction_in_open_hemisphere,
    dot,
    gf2_rank_of_rows,
    has_nonnegative_dependence,
    kernel_basis,
    pivot_columns,
    rank_gf2,
    rank_rational,
    strictly_positive_dependence,
    to_rational,
    to_vector,
    zero_in_convex_hull,
)


def test_to_rational_parses_strings_and_ints():
    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational(" -4 ") == Fraction(-4)
    assert to_rational(7) == Fraction(7)


@pytest.mark.parametrize("bad", [1.5, True, "x/2", "1/0", None])
def test_to_rational_refuses_non_rationals(bad):
    with pytest.raises(InputError):
        to_rational(bad)


def test_rank_rational():
    assert rank_rational(RationalMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank_rational(RationalMatrix.from_rows([[1, 0, 1], [0, 1, 1], [1, 1, 0]])) == 3


def test_kernel_basis_is_canonical():
    basis = kernel_basis(RationalMatrix.from_rows([[1, 1, 1]]))
    assert basis.cols == 2
    assert basis.columns() == [to_vector([1, 0, -1]), to_vector([0, 1, -1])]
    assert kernel_basis(RationalMatrix.from_rows([["2", "2", "2"]])).columns() == basis.columns()


def test_kernel_vectors_are_annihilated():
    matrix = RationalMatrix.from_rows([[1, 2, 3, 4], [0, 1, "1/2", 2]])
    basis = kernel_basis(matrix)
    assert basis.cols == 2
    for column in basis.columns():
        assert all(x == 0 for x in matrix.apply(column))


def test_apply_checks_length():
    with pytest.raises(DimensionMismatchError):
        RationalMatrix.from_rows([[1, 2]]).apply(to_vector([1]))


def test_affine_rank():
    assert affine_rank([]) == -1
    assert affine_rank([to_vector([3, 3])]) == 0
    assert affine_rank([to_vector(p) for p in [[0, 0], [1, 1], [2, 2]]]) == 1
    assert affine_rank([to_vector(p) for p in [[0, 0], [1, 0], [0, 1]]]) == 2


def test_gf2_rank():
    assert gf2_rank_of_rows([0b011, 0b110, 0b101]) == 2
    assert gf2_rank_of_rows([0b001, 0b010, 0b100]) == 3
    assert rank_gf2(GF2Matrix.from_bits([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 2


def test_gf2_matrix_bits():
    matrix = GF2Matrix.from_bits([[1, 0, 1], [0, 1, 1]])
    assert matrix.entry(0, 2) == 1
    assert matrix.entry(1, 0) == 0
    assert matrix.to_bits() == [[1, 0, 1], [0, 1, 1]]
    assert matrix.select_rows([1]).to_bits() == [[0, 1, 1]]


def test_mixed_dimensions_rejected():
    with pytest.raises(DimensionMismatchError):
        as_vectors([[1, 2], [3]])


@pytest.mark.parametrize(
    "points, expected",
    [
        ([[1, 0], [-1, 0]], True),
        ([[1, 0], [0, 1]], False),
        ([[1, 0], [-1, 1], [-1, -1]], True),
        ([[0, 0]], True),
        ([[1, 1], [2, 3], [5, 1]], False),
    ],
)
def test_zero_in_convex_hull(points, expected):
    assert zero_in_convex_hull(points) is expected
    assert has_nonnegative_dependence(points) is expected


def test_nonnegative_dependence_ignores_scaling():
    assert has_nonnegative_dependence([[1, 0], [-100, 0]])
    assert has_nonnegative_dependence([["1/3", 0], [-5, 0]])


def test_strictly_positive_dependence():
    assert strictly_positive_dependence([[1], [-1]])
    assert not strictly_positive_dependence([[1], [2]])
    assert strictly_positive_dependence([])
    assert not strictly_positive_dependence([[1, 0], [-1, 0], [0, 1]])
    assert strictly_positive_dependence([[1, 0], [-1, 1], [-1, -1]])


def test_direction_in_open_hemisphere():
    points = [to_vector(p) for p in [[1, 0], [0, 1], [1, 5]]]
    direction = direction_in_open_hemisphere(points)
    assert direction is not None
    assert all(dot(direction, p) >= 1 for p in points)
    assert direction_in_open_hemisphere([[1], [-1]]) is None


def test_direction_for_no_points():
    assert direction_in_open_hemisphere([], dim=2) == (1, 0)
    with pytest.raises(InputError):
        direction_in_open_hemisphere([])


def test_pivot_columns():
    assert pivot_columns([[0, 2, 4], [0, 1, 2]], 3) == [1]
    assert pivot_columns([[1, 0, 5], [0, 0, 1]], 3) == [0, 2]
    assert pivot_columns([], 2) == []


def _random_points(rng, dim):
    return [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(rng.randint(1, 6))]


@pytest.mark.parametrize("seed", range(5))
def test_convex_hull_agrees_with_hemisphere_program(seed):
    # Gordan: 0 is outside conv(X) iff some y has <y, x> > 0 on all of X
    rng = random.Random(seed)
    for _ in range(40):
        dim = rng.randint(1, 3)
        points = _random_points(rng, dim)
        assert zero_in_convex_hull(points) == (direction_in_open_hemisphere(points, dim) is None), points


def _plane_directions(points):
    for x, y in points:
        yield from [(x, y), (-x, -y), (-y, x), (y, -x)]


@pytest.mark.parametrize("seed", range(5))
def test_positive_dependence_agrees_with_direction_enumeration(seed):
    # Stiemke: no l > 0 with sum(l x) = 0 iff some y has <y, x> >= 0 on X, > 0 somewhere.
    # In the plane such a y can be taken among the points and their perpendiculars.
    rng = random.Random(100 + seed)
    for _ in range(60):
        points = _random_points(rng, 2)
        separated = any(
            all(a * x + b * y >= 0 for x, y in points) and any(a * x + b * y > 0 for x, y in points)
            for a, b in _plane_directions(points)
        )
        assert strictly_positive_dependence(points) == (not separated), points
