import pytest

from utils.complex_core import all_complexes
from utils.errors import InputError
from utils.homology import Field
from utils.verify import SUITES, SuiteSizes, verify_all, verify_suite, xi_candidates

SMALL = SuiteSizes(
    exhaustive_m=3,
    isomorphism_m=(4,),
    sampled_m=(5,),
    samples=10,
    xi_max_rank=2,
    xi_sampled_m=(5,),
    xi_samples=6,
    xi_budget=20_000,
    coloring_max_k=3,
    pipeline_max_k=2,
    polygon_max_k=2,
    fano_trials=200,
    gate_m=8,
    gate_faces=12,
    gate_threads=2,
)

FAST = [
    "duality-involution",
    "alexander-homology",
    "link-sub",
    "polygon-betti",
    "xi-criterion",
    "hochster-threads",
    "coloring",
    "fano",
    "fano-circle",
]


@pytest.mark.parametrize("name", FAST)
@pytest.mark.parametrize("field", [Field.GF2, Field.Q])
def test_small_suites_pass(name, field):
    report = verify_suite(name, SMALL, field)
    assert report.name == name
    assert report.checks > 0
    assert report.passed, report.failures


@pytest.mark.parametrize(
    "name", ["gale-alexander", "constellation-spheres", "linear-resolution", "betti-fvector", "pyramid-theorem", "corpus"]
)
def test_corpus_suites_pass(name, corpus_dir):
    report = verify_suite(name, SuiteSizes(corpus_dir=corpus_dir))
    assert report.passed, report.failures


def test_unknown_suite():
    with pytest.raises(InputError, match="unknown suite"):
        verify_suite("nope", SMALL)


def test_every_suite_runs_once():
    sizes = SuiteSizes(
        exhaustive_m=2,
        isomorphism_m=(),
        sampled_m=(),
        xi_sampled_m=(5,),
        xi_samples=2,
        polygon_max_k=1,
        fano_trials=10,
        gate_m=6,
        gate_threads=2,
    )
    reports = verify_all(sizes)
    assert [r.name for r in reports] == list(SUITES)
    assert len(SUITES) == 15


def test_isomorphism_classes_extend_the_exhaustive_sizes():
    # proper complexes: 1 on one vertex, 4 on two, and 8 classes on three
    report = verify_suite("duality-involution", SuiteSizes(exhaustive_m=2, isomorphism_m=(3,), sampled_m=()))
    assert report.checks == 2 * 13


def test_xi_candidates_reach_past_four_vertices():
    candidates = xi_candidates(SuiteSizes(xi_sampled_m=(5, 6, 7, 8), xi_samples=5))
    small = [k for k in candidates if k.m <= 4]
    proper = [k for m in range(1, 5) for k in all_complexes(m) if not k.is_full_simplex()]
    assert small == proper
    assert {k.m for k in candidates if k.m > 4} == {5, 6, 7, 8}


def test_xi_criterion_fails_when_a_size_goes_unchecked():
    report = verify_suite("xi-criterion", SuiteSizes(exhaustive_m=2, xi_sampled_m=(5,), xi_samples=0))
    assert not report.passed
    assert report.failures == ["no instance on 5 vertices was decided"]
