import random

import pytest

from utils.complex_core import (
    all_complexes,
    canonical_form,
    complexes_up_to_isomorphism,
    alexander_dual,
    cone,
    f_vector,
    from_maximal_faces,
    from_minimal_nonfaces,
    full_simplex,
    full_subcomplex,
    is_face,
    is_flag,
    is_subcomplex,
    join,
    link,
    members,
    minimal_nonfaces,
    minimal_transversals,
    random_complex,
    simplex_boundary,
    skeleton,
    vertex_set,
    wedge_multiply,
)
from utils.errors import DualUndefinedError, InputError, NotAFaceError, VertexRangeError
from utils.homology import reduced_betti


def test_vertex_sets_are_bitmasks():
    assert vertex_set([0, 2]) == 0b101
    assert members(0b1010) == (1, 3)


def test_four_cycle_faces(four_cycle):
    assert four_cycle.maximal_faces == (0b0011, 0b0110, 0b1001, 0b1100)
    assert minimal_nonfaces(four_cycle) == (0b0101, 0b1010)
    assert four_cycle.dimension == 1
    assert is_face(four_cycle, [0, 1])
    assert not is_face(four_cycle, [0, 2])


def test_generators_agree(four_cycle):
    assert from_maximal_faces(4, [[0, 1], [1, 2], [2, 3], [0, 3]]) == four_cycle


def test_alexander_dual_of_four_cycle(four_cycle):
    dual = alexander_dual(four_cycle)
    assert dual.maximal_faces == (0b0101, 0b1010)
    assert dual.minimal_nonfaces == (0b0011, 0b0110, 0b1001, 0b1100)
    assert alexander_dual(dual) == four_cycle


def test_dual_of_full_simplex_is_undefined():
    with pytest.raises(DualUndefinedError, match="dual undefined for the full simplex"):
        alexander_dual(full_simplex(3))


def test_dual_of_void_is_simplex_boundary():
    void = from_maximal_faces(3, [[]])
    assert void.ghost_vertices == (0, 1, 2)
    assert alexander_dual(void) == simplex_boundary(3)


def test_double_dual_on_random_complexes():
    rng = random.Random(11)
    for _ in range(200):
        k = random_complex(6, rng)
        if not k.is_full_simplex():
            assert alexander_dual(alexander_dual(k)) == k


def test_link_keeps_ghosts_and_labels(four_cycle):
    lk = link(four_cycle, [0])
    assert lk.m == 3
    assert lk.maximal_faces == (0b001, 0b100)
    assert lk.labels == (1, 2, 3)
    assert lk.ghost_vertices == (1,)


def test_link_of_nonface(four_cycle):
    with pytest.raises(NotAFaceError):
        link(four_cycle, [0, 2])


def test_full_subcomplex(four_cycle):
    sub = full_subcomplex(four_cycle, [0, 2])
    assert sub.m == 2
    assert sub.maximal_faces == (0b01, 0b10)
    assert sub.labels == (0, 2)


def test_skeleton(sphere_2):
    assert skeleton(sphere_2, 0).maximal_faces == (1, 2, 4, 8)
    assert f_vector(skeleton(sphere_2, 1)) == [1, 4, 6]
    assert is_subcomplex(skeleton(sphere_2, 1), sphere_2)
    with pytest.raises(InputError):
        skeleton(sphere_2, -2)


def test_join_of_two_point_pairs_is_a_square(four_cycle):
    s0 = from_minimal_nonfaces(2, [[0, 1]])
    square = join(s0, s0)
    assert square.minimal_nonfaces == (0b0011, 0b1100)
    assert reduced_betti(square).nonzero() == reduced_betti(four_cycle).nonzero()


def test_cone_is_acyclic(four_cycle):
    coned = cone(four_cycle)
    assert coned.m == 5
    assert reduced_betti(coned).is_zero()


def test_wedge_multiply(four_cycle):
    wedged = wedge_multiply(four_cycle, [2, 1, 1, 1])
    assert wedged.m == 5
    assert wedged.minimal_nonfaces == (vertex_set([0, 1, 3]), vertex_set([2, 4]))
    assert wedged.labels == (0, 0, 1, 2, 3)
    with pytest.raises(InputError):
        wedge_multiply(four_cycle, [1, 1, 1])


def test_flag(four_cycle):
    assert is_flag(four_cycle)
    assert not is_flag(simplex_boundary(3))


def test_f_vector(four_cycle, sphere_2):
    assert f_vector(four_cycle) == [1, 4, 4]
    assert f_vector(sphere_2) == [1, 4, 6, 4]


def test_all_complexes_counts():
    assert len(list(all_complexes(2))) == 5
    assert len(set(all_complexes(3))) == 19


def test_minimal_transversals():
    assert minimal_transversals([0b011, 0b110]) == (0b010, 0b101)
    assert minimal_transversals([0]) == ()


def test_universe_checked():
    with pytest.raises(VertexRangeError):
        from_maximal_faces(3, [[0, 5]])
    with pytest.raises(InputError):
        from_minimal_nonfaces(3, [[]])


def test_labels_do_not_affect_equality(four_cycle):
    relabelled = four_cycle.relabel([3, 2, 1, 0])
    assert relabelled == four_cycle
    assert hash(relabelled) == hash(four_cycle)


@pytest.mark.parametrize("m, classes", [(1, 2), (2, 4), (3, 9), (4, 29)])
def test_isomorphism_classes(m, classes):
    representatives = complexes_up_to_isomorphism(m)
    assert len(representatives) == classes
    assert len({canonical_form(m, k.maximal_faces) for k in representatives}) == classes
    assert {canonical_form(m, k.maximal_faces) for k in all_complexes(m)} == {
        canonical_form(m, k.maximal_faces) for k in representatives
    }


def test_canonical_form_ignores_vertex_names(rp2):
    rng = random.Random(3)
    order = list(range(6))
    for _ in range(5):
        rng.shuffle(order)
        renamed = [sum(1 << order[v] for v in members(f)) for f in rp2.maximal_faces]
        assert canonical_form(6, renamed) == canonical_form(6, rp2.maximal_faces)
    assert canonical_form(4, [0b0011]) != canonical_form(4, [0b0011, 0b1100])


def test_wedges_can_be_taken_in_stages(four_cycle, octahedron_boundary):
    staged = wedge_multiply(wedge_multiply(four_cycle, [2, 1, 1, 1]), [1, 2, 1, 1, 1])
    assert staged == wedge_multiply(four_cycle, [3, 1, 1, 1])
    staged = wedge_multiply(wedge_multiply(four_cycle, [2, 1, 1, 1]), [1, 1, 2, 1, 1])
    assert staged == wedge_multiply(four_cycle, [2, 2, 1, 1])
    staged = wedge_multiply(wedge_multiply(octahedron_boundary, [1, 1, 2, 1, 1, 1]), [1, 1, 1, 1, 1, 1, 2])
    assert staged == wedge_multiply(octahedron_boundary, [1, 1, 2, 1, 1, 2])
