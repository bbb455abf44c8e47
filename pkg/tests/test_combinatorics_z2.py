import pytest

from utils.combinatorics_z2 import (
    Coloring,
    captures_origin,
    fano_circle_experiment,
    fano_line_avoiding_origin,
    fano_lines,
    fano_two_coloring_check,
    is_proper_coloring,
    proper_coloring_search,
)
from utils.errors import CapExceededError, InputError


@pytest.mark.parametrize("k", [2, 3])
def test_k_colors_needed(k):
    assert proper_coloring_search(k, k - 1).coloring is None
    found = proper_coloring_search(k, k).coloring
    assert found is not None
    assert is_proper_coloring(found)
    assert found.used == k


def test_one_vector_needs_one_color():
    found = proper_coloring_search(1, 1).coloring
    assert found == Coloring(1, (1,))


def test_improper_colorings():
    assert not is_proper_coloring(Coloring(2, (1, 1, 1)))
    assert is_proper_coloring(Coloring(2, (1, 1, 2)))
    assert not is_proper_coloring(Coloring(2, (1, 2)))


def test_coloring_search_limits():
    with pytest.raises(CapExceededError):
        proper_coloring_search(5, 5)
    with pytest.raises(InputError):
        proper_coloring_search(2, 0)


def test_fano_plane():
    lines = fano_lines()
    assert len(lines) == 7
    assert all(a ^ b == c for a, b, c in lines)
    report = fano_two_coloring_check()
    assert report.colorings == 128
    assert report.holds


def test_captures_origin():
    assert captures_origin((1, 0), (-1, 1), (-1, -1))
    assert not captures_origin((1, 0), (1, 1), (0, 1))
    assert captures_origin((1, 0), (-1, 0), (0, 1))
    assert not captures_origin((1, 0), (2, 0), (3, 0))


def test_line_avoiding_origin_found():
    eta = [(1, 0)] * 7
    assert fano_line_avoiding_origin(eta) == fano_lines()[0]


def test_fano_circle_small_run():
    report = fano_circle_experiment(trials=200, seed=3, threads=1)
    assert report.trials == 200
    assert report.seed == 3
    assert report.counterexamples == 0
    assert report.first_counterexample is None


def test_fano_circle_is_seeded():
    first = fano_circle_experiment(trials=50, seed=9, threads=1)
    second = fano_circle_experiment(trials=50, seed=9, threads=2)
    assert first == second


def test_fano_circle_needs_trials():
    with pytest.raises(InputError):
        fano_circle_experiment(trials=0)
