import itertools
import logging
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator

from config.config import BUCHSTABER_MAX_VERTICES, COLORING_MAX_RANK, FANO_CIRCLE_TRIALS, VERIFY_SAMPLES, VERIFY_SEED
from models.model import SuiteReportModel
from utils.betti import (
    betti_of_polytope_via_gale_links,
    betti_via_links,
    has_linear_resolution,
    hochster_betti,
    polytope_betti_from_gale,
)
from utils.buchstaber import (
    eta_certificate_check,
    eta_from_xi,
    s_equals_one,
    s_real_exact,
    s_real_lower_via_xi,
)
from utils.combinatorics_z2 import (
    coloring_from_eta,
    fano_circle_experiment,
    fano_lines,
    fano_two_coloring_check,
    is_proper_coloring,
    proper_coloring_search,
)
from utils.complex_core import (
    SimplicialComplex,
    all_complexes,
    complexes_up_to_isomorphism,
    alexander_dual,
    from_minimal_nonfaces,
    full_mask,
    full_subcomplex,
    is_face,
    link,
    members,
    random_complex,
    vertex_set,
)
from utils.corpus import check_entry, load_entry, load_manifest, load_polytopes
from utils.errors import InputError
from utils.gale import (
    PointConfiguration,
    constellation_complex,
    construction_step_check,
    flag_bound_holds,
    gale_diagram,
    is_good,
    is_nondegenerate,
    max_faces_below_flag_bound,
    polygon_configuration,
    sphere_property_violations,
    verify_gale_alexander,
)
from utils.homology import Field, reduced_betti
from utils.polytope import (
    Polytope,
    crosspolytope_vertices,
    is_pyramid,
    is_simplicial,
    nerve_KP,
    nerve_KQ,
    polytope_from_vertices,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteSizes:
    """How far each suite reaches; the defaults are the acceptance run."""

    exhaustive_m: int = 5
    isomorphism_m: tuple[int, ...] = (6,)
    sampled_m: tuple[int, ...] = (7,)
    samples: int = VERIFY_SAMPLES
    seed: int = VERIFY_SEED
    xi_max_rank: int = 3
    xi_sampled_m: tuple[int, ...] = (5, 6, 7, 8)
    xi_samples: int = 40
    xi_budget: int = 200_000
    coloring_max_k: int = COLORING_MAX_RANK
    pipeline_max_k: int = 3
    polygon_max_k: int = 4
    fano_trials: int = FANO_CIRCLE_TRIALS
    gate_m: int = 16
    gate_faces: int = 200
    gate_threads: int = 8
    gate_seconds: float = 300.0
    corpus_dir: str | Path | None = None


@dataclass
class _Run:
    name: str
    checks: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)
            logger.warning(f"{self.name}: {message}")

    def report(self) -> SuiteReportModel:
        return SuiteReportModel(
            name=self.name, passed=not self.failures, checks=self.checks, skipped=self.skipped, failures=self.failures
        )


def _complexes(sizes: SuiteSizes) -> Iterator[SimplicialComplex]:
    """Every complex on up to exhaustive_m vertices, one per isomorphism class on the
    isomorphism_m sizes, then seeded samples on the larger sizes.
    """
    for m in range(1, sizes.exhaustive_m + 1):
        yield from all_complexes(m)
    for m in sizes.isomorphism_m:
        yield from complexes_up_to_isomorphism(m)
    rng = random.Random(sizes.seed)
    for m in sizes.sampled_m:
        for _ in range(sizes.samples):
            yield random_complex(m, rng)


def _proper(sizes: SuiteSizes) -> Iterator[SimplicialComplex]:
    return (k for k in _complexes(sizes) if not k.is_full_simplex())


def _polytopes(sizes: SuiteSizes) -> list[tuple[str, Polytope]]:
    return load_polytopes(sizes.corpus_dir)


def _configurations(sizes: SuiteSizes) -> dict[str, tuple[PointConfiguration, Polytope | None]]:
    out = {}
    for entry in load_manifest(sizes.corpus_dir).entries:
        if entry.configuration:
            loaded = load_entry(entry, sizes.corpus_dir)
            out[entry.name] = (loaded.configuration, loaded.polytope)
    return out


def _show(k: SimplicialComplex) -> str:
    return f"m={k.m} faces={[list(members(f)) for f in k.maximal_faces]}"


def duality_involution(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("duality-involution")
    for k in _proper(sizes):
        run.check(alexander_dual(alexander_dual(k)) == k, f"double dual differs for {_show(k)}")
        run.check(from_minimal_nonfaces(k.m, k.minimal_nonfaces) == k, f"nonface round trip differs for {_show(k)}")
    return run.report()


def alexander_homology(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("alexander-homology")
    for k in _proper(sizes):
        ours = reduced_betti(k, field).nonzero()
        dual = {k.m - 3 - p: b for p, b in reduced_betti(alexander_dual(k), field).nonzero().items()}
        run.check(ours == dual, f"H~(K) = {ours} but the dual gives {dual} for {_show(k)}")
    return run.report()


def link_sub(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("link-sub")
    for k in _proper(sizes):
        dual = alexander_dual(k)
        universe = full_mask(k.m)
        for size in range(k.m + 1):
            for subset in itertools.combinations(range(k.m), size):
                mask = vertex_set(subset)
                rest = universe & ~mask
                if is_face(k, mask):
                    ok = alexander_dual(link(k, mask)) == full_subcomplex(dual, rest)
                    run.check(ok, f"dual of link {list(subset)} differs from the dual's restriction, {_show(k)}")
                else:
                    ok = alexander_dual(full_subcomplex(k, mask)) == link(dual, rest)
                    run.check(ok, f"dual of K_{list(subset)} differs from the dual's link, {_show(k)}")
    return run.report()


def gale_alexander(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("gale-alexander")
    for name, p in _polytopes(sizes):
        run.check(verify_gale_alexander(p), f"{name}: K(P) dual and constellation complex differ")
        run.check(flag_bound_holds(p), f"{name}: flag simplicial polytope with fewer than 2d vertices")
    return run.report()


def constellation_spheres(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("constellation-spheres")
    configurations = {name: x for name, (x, _) in _configurations(sizes).items()}
    degenerate = configurations.pop("degenerate_s2", None)
    configurations.pop("hexagon_rays", None)
    for name, p in _polytopes(sizes):
        if name in ("octahedron", "crosspolytope_4"):
            configurations[f"gale({name})"] = gale_diagram(p)
    for name, x in configurations.items():
        run.check(is_good(x) and is_nondegenerate(x), f"{name}: expected a good nondegenerate configuration")
        violations = sphere_property_violations(x, field)
        run.check(not violations, f"{name}: full subcomplexes {[list(members(v)) for v in violations]} are not spheres")
        run.check(construction_step_check(x, field), f"{name}: construction steps are not acyclic")
        run.check(max_faces_below_flag_bound(x), f"{name}: flag constellation complex past m = 2(r + 2)")
    if degenerate is not None:
        run.check(not is_nondegenerate(degenerate), "degenerate_s2: reported nondegenerate")
        run.check(bool(sphere_property_violations(degenerate, field)), "degenerate_s2: no sphere violation found")
    return run.report()


def linear_resolution(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("linear-resolution")
    expected = {"pentagon_rays": True, "hexagon_rays": False}
    configurations = _configurations(sizes)
    for name, linear in expected.items():
        if name not in configurations:
            continue
        x, _ = configurations[name]
        table = hochster_betti(constellation_complex(x), field)
        run.check(has_linear_resolution(table, x.r) == linear, f"{name}: linear resolution should be {linear}")
    return run.report()


def betti_fvector(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("betti-fvector")
    for name, (x, p) in _configurations(sizes).items():
        if p is None:
            continue
        comparison = polytope_betti_from_gale(x, p, field)
        run.check(not comparison.residual, f"{name}: table and f_(n,l) differ at {comparison.residual}")
    for name, p in _polytopes(sizes):
        if not is_simplicial(p) or p.m == p.dimension + 1:
            continue
        via_links = betti_of_polytope_via_gale_links(gale_diagram(p), field).entries
        direct = hochster_betti(nerve_KP(p), field).entries
        run.check(via_links == direct, f"{name}: link formula {via_links} differs from Hochster {direct}")
        run.check(
            betti_via_links(nerve_KP(p), field).entries == hochster_betti(alexander_dual(nerve_KP(p)), field).entries,
            f"{name}: table of the dual read from links differs from Hochster",
        )
    return run.report()


def polygon_betti(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("polygon-betti")
    for k in range(1, sizes.polygon_max_k + 1):
        count = 2 * k + 1
        table = betti_of_polytope_via_gale_links(polygon_configuration(k), field).entries
        expected = {(0, 0): 1, (1, 2 * k): count, (2, 2 * (k + 1)): count, (3, 2 * count): 1}
        run.check(table == expected, f"{count} rays: got {table}, expected {expected}")
    return run.report()


def pyramid_theorem(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("pyramid-theorem")
    for name, p in _polytopes(sizes):
        apex = is_pyramid(p)
        result = s_equals_one(p)
        run.check(result.s_is_one == (apex is not None), f"{name}: s = 1 is {result.s_is_one}, apex {apex}")
        if len(p.facets) > BUCHSTABER_MAX_VERTICES:
            logger.info(f"{name}: K_P has {len(p.facets)} vertices, subgroup search skipped")
            continue
        if apex is None:
            run.check(result.disjoint_nonfaces is not None, f"{name}: no disjoint pair of minimal nonfaces in K_P")
            value = s_real_exact(nerve_KQ(p), r_max=2).value
            run.check(value >= 2, f"{name}: s_R(K_P) = {value} for a non-pyramid")
        else:
            value = s_real_exact(nerve_KQ(p)).value
            run.check(value == 1, f"{name}: s_R(K_P) = {value} for a pyramid")
    return run.report()


def xi_candidates(sizes: SuiteSizes) -> list[SimplicialComplex]:
    """Every proper complex on at most four vertices, then seeded samples on each xi_sampled_m."""
    small = SuiteSizes(exhaustive_m=min(sizes.exhaustive_m, 4), isomorphism_m=(), sampled_m=())
    candidates = list(_proper(small))
    rng = random.Random(sizes.seed + 1)
    for m in sizes.xi_sampled_m:
        sampled = (random_complex(m, rng) for _ in range(sizes.xi_samples))
        candidates.extend(k for k in sampled if not k.is_full_simplex())
    return candidates


def xi_criterion(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    """s_R(K) >= k exactly when some xi of rank k exists; searches cut off by the budget are skipped."""
    run = _Run("xi-criterion")
    decided = Counter()
    for k in xi_candidates(sizes):
        exact = s_real_exact(k, budget=sizes.xi_budget)
        if not exact.exact:
            run.skipped += 1
            continue
        for rank in range(1, min(exact.value + 1, sizes.xi_max_rank) + 1):
            search = s_real_lower_via_xi(k, rank, budget=sizes.xi_budget)
            if not search.complete:
                run.skipped += 1
                continue
            decided[k.m] += 1
            run.check(
                (search.xi is not None) == (rank <= exact.value),
                f"s_R = {exact.value} but xi of rank {rank} {'exists' if search.xi else 'is missing'} for {_show(k)}",
            )
    logger.info(f"xi-criterion decided by vertex count: {dict(sorted(decided.items()))}, {run.skipped} skipped")
    for m in sizes.xi_sampled_m:
        run.check(decided[m] > 0, f"no instance on {m} vertices was decided")
    return run.report()


def hochster_threads(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    """The Hochster sweep on gate_threads workers matches one worker, within gate_seconds."""
    run = _Run("hochster-threads")
    k = random_complex(sizes.gate_m, random.Random(sizes.seed + 2), max_faces=sizes.gate_faces)
    started = time.perf_counter()
    parallel = hochster_betti(k, field, threads=sizes.gate_threads)
    elapsed = time.perf_counter() - started
    serial = hochster_betti(k, field, threads=1)
    logger.info(f"{len(k.maximal_faces)} maximal faces on {k.m} vertices: {elapsed:.1f}s on {sizes.gate_threads} workers")
    run.check(parallel.entries == serial.entries, f"{sizes.gate_threads} workers and one worker differ for {_show(k)}")
    run.check(elapsed <= sizes.gate_seconds, f"sweep took {elapsed:.1f}s, over {sizes.gate_seconds:.0f}s")
    return run.report()


def coloring(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("coloring")
    for k in range(2, sizes.coloring_max_k + 1):
        run.check(proper_coloring_search(k, k - 1).coloring is None, f"k={k}: {k - 1} colors suffice")
        found = proper_coloring_search(k, k).coloring
        run.check(found is not None and is_proper_coloring(found), f"k={k}: no proper {k}-coloring")
    for k in range(2, sizes.pipeline_max_k + 1):
        p = polytope_from_vertices(crosspolytope_vertices(k))
        x = gale_diagram(p)
        xi = s_real_lower_via_xi(nerve_KP(p), k).xi
        run.check(xi is not None, f"crosspolytope {k}: no xi of rank {k}")
        if xi is None:
            continue
        eta = eta_from_xi(x, xi)
        run.check(eta_certificate_check(x, k, eta), f"crosspolytope {k}: eta certificate fails")
        colors = coloring_from_eta(x.points[::2], eta, k)
        run.check(is_proper_coloring(colors), f"crosspolytope {k}: eta coloring {colors.colors} is improper")
    return run.report()


def fano(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("fano")
    run.check(len(fano_lines()) == 7, f"{len(fano_lines())} Fano lines")
    report = fano_two_coloring_check()
    run.check(report.colorings == 128 and report.holds, f"{report.with_single_colored_line} of {report.colorings}")
    run.check(proper_coloring_search(3, 2).coloring is None, "a proper 2-coloring of the Fano plane exists")
    return run.report()


def fano_circle(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("fano-circle")
    report = fano_circle_experiment(trials=sizes.fano_trials)
    run.check(report.counterexamples == 0, f"{report.counterexamples} counterexamples, first {report.first_counterexample}")
    return run.report()


def corpus_oracles(sizes: SuiteSizes, field: Field) -> SuiteReportModel:
    run = _Run("corpus")
    for entry in load_manifest(sizes.corpus_dir).entries:
        failures = check_entry(entry, sizes.corpus_dir)
        run.checks += len(entry.expected)
        run.failures.extend(failures)
    return run.report()


SUITES: dict[str, Callable[[SuiteSizes, Field], SuiteReportModel]] = {
    "duality-involution": duality_involution,
    "alexander-homology": alexander_homology,
    "link-sub": link_sub,
    "gale-alexander": gale_alexander,
    "constellation-spheres": constellation_spheres,
    "linear-resolution": linear_resolution,
    "betti-fvector": betti_fvector,
    "polygon-betti": polygon_betti,
    "pyramid-theorem": pyramid_theorem,
    "xi-criterion": xi_criterion,
    "hochster-threads": hochster_threads,
    "coloring": coloring,
    "fano": fano,
    "fano-circle": fano_circle,
    "corpus": corpus_oracles,
}


def verify_suite(name: str, sizes: SuiteSizes | None = None, field: Field = Field.GF2) -> SuiteReportModel:
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}, expected one of {', '.join(SUITES)} or all")
    sizes = sizes or SuiteSizes()
    logger.info(f"running suite {name}")
    report = SUITES[name](sizes, field)
    logger.info(f"suite {name}: {'PASS' if report.passed else 'FAIL'} ({report.checks} checks)")
    return report


def verify_all(sizes: SuiteSizes | None = None, field: Field = Field.GF2) -> list[SuiteReportModel]:
    return [verify_suite(name, sizes, field) for name in SUITES]
