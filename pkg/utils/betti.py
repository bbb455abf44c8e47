import functools
import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field

from config.config import HOCHSTER_MAX_VERTICES, SUBCOMPLEX_CACHE_SIZE, THREADS
from utils.complex_core import (
    SimplicialComplex,
    VertexSet,
    alexander_dual,
    antichain_maximal,
    compress_mask,
    full_mask,
    full_subcomplex,
    is_face,
    link,
    members,
    vertex_set,
)
from utils.errors import CapExceededError, DualUndefinedError, InputError
from utils.gale import PointConfiguration, constellation_complex
from utils.homology import BettiVector, Field, reduced_betti
from utils.polytope import Polytope, f_nl

logger = logging.getLogger(__name__)

# (i, 2j) -> beta^{-i,2j}
Degree = tuple[int, int]


@dataclass(frozen=True)
class BettiTable:
    m: int
    field: Field
    entries: dict[Degree, int] = dataclass_field(default_factory=dict)

    def get(self, i: int, deg: int) -> int:
        return self.entries.get((i, deg), 0)

    def items(self) -> list[tuple[Degree, int]]:
        return sorted((key, value) for key, value in self.entries.items() if value)

    def row_sums(self) -> dict[int, int]:
        """beta^{-i}: total rank of the i-th module of the resolution."""
        sums: Counter = Counter()
        for (i, _), value in self.entries.items():
            sums[i] += value
        return dict(sorted(sums.items()))

    def positive_part(self) -> dict[Degree, int]:
        return {key: value for key, value in self.items() if key[0] > 0}


@dataclass(frozen=True)
class GaleBettiComparison:
    table: BettiTable
    residual: dict[Degree, int] | None


def _restriction(maximal_faces: tuple[VertexSet, ...], subset: VertexSet) -> tuple[int, tuple[VertexSet, ...]]:
    # Full subcomplex on `subset` with ghost vertices dropped; homology does not see them.
    parts = [f & subset for f in maximal_faces]
    covered = 0
    for part in parts:
        covered |= part
    positions = members(covered)
    return len(positions), antichain_maximal(compress_mask(part, positions) for part in parts)


@functools.lru_cache(maxsize=SUBCOMPLEX_CACHE_SIZE)
def _cached_betti(m: int, faces: tuple[VertexSet, ...], field: Field) -> BettiVector:
    return reduced_betti(SimplicialComplex(m, faces), field)


def _sweep(maximal_faces: tuple[VertexSet, ...], field: Field, subsets: list[VertexSet]) -> dict[Degree, int]:
    counts: Counter = Counter()
    for subset in subsets:
        betti = _cached_betti(*_restriction(maximal_faces, subset), field)
        j = subset.bit_count()
        for p, b in betti.nonzero().items():
            counts[(j - p - 1, 2 * j)] += b
    return dict(counts)


def _nonface_subsets(k: SimplicialComplex) -> list[VertexSet]:
    """The empty set, then every nonface J, by cardinality and lexicographically within."""
    out = [0]
    for size in range(1, k.m + 1):
        for subset in itertools.combinations(range(k.m), size):
            mask = vertex_set(subset)
            if not is_face(k, mask):
                out.append(mask)
    return out


def hochster_betti(k: SimplicialComplex, field: Field = Field.GF2, threads: int | None = None) -> BettiTable:
    """beta^{-i,2j}(K) as the sum over |J| = j of dim H~_{j-i-1}(K_J)."""
    if k.m > HOCHSTER_MAX_VERTICES:
        raise CapExceededError(f"{k.m} vertices exceeds the Hochster cap of {HOCHSTER_MAX_VERTICES}")
    workers = threads or THREADS
    subsets = _nonface_subsets(k)
    logger.info(f"hochster sweep over {len(subsets)} subsets of {k.m} vertices, {workers} workers")
    if workers <= 1 or len(subsets) < 2 * workers:
        counts = _sweep(k.maximal_faces, field, subsets)
    else:
        chunk = -(-len(subsets) // workers)
        chunks = [subsets[s:s + chunk] for s in range(0, len(subsets), chunk)]
        merged: Counter = Counter()
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for part in executor.map(functools.partial(_sweep, k.maximal_faces, field), chunks):
                merged.update(part)
        counts = dict(merged)
    return BettiTable(k.m, field, {key: value for key, value in sorted(counts.items()) if value})


def has_linear_resolution(table: BettiTable, r: int) -> bool:
    return all(deg == 2 * (r + i + 1) for (i, deg), value in table.items() if i > 0 and value)


def betti_via_links(k: SimplicialComplex, field: Field = Field.GF2) -> BettiTable:
    """Table of the Alexander dual of K, read off links of K.

    For a face [m] - J of K the contribution to beta^{-i,2j} is dim H~_{i-2} of its link;
    the remaining J fall back to the full subcomplex of the dual.
    """
    if k.is_full_simplex():
        raise DualUndefinedError()
    dual = alexander_dual(k)
    universe = full_mask(k.m)
    counts: Counter = Counter()
    for size in range(k.m + 1):
        for subset in itertools.combinations(range(k.m), size):
            mask = vertex_set(subset)
            complement = universe & ~mask
            if is_face(k, complement):
                for a, b in reduced_betti(link(k, complement), field).nonzero().items():
                    counts[(a + 2, 2 * size)] += b
            else:
                for p, b in reduced_betti(full_subcomplex(dual, mask), field).nonzero().items():
                    counts[(size - p - 1, 2 * size)] += b
    return BettiTable(k.m, field, {key: value for key, value in sorted(counts.items()) if value})


def polytope_betti_from_gale(
    x: PointConfiguration, polytope: Polytope | None = None, field: Field = Field.GF2
) -> GaleBettiComparison:
    """Hochster table of the constellation complex and, given P, its residual against f_{d-i,m-j}(P)."""
    table = hochster_betti(constellation_complex(x), field)
    if polytope is None:
        return GaleBettiComparison(table, None)
    if polytope.m != x.m:
        raise InputError(f"polytope has {polytope.m} vertices, configuration has {x.m} points")
    d = polytope.dimension
    expected = {(d - n, 2 * (x.m - l)): count for (n, l), count in f_nl(polytope).items()}
    keys = {key for key in set(expected) | set(table.entries) if key[0] > 0}
    residual = {}
    for key in sorted(keys):
        difference = table.get(*key) - expected.get(key, 0)
        if difference:
            residual[key] = difference
    if residual:
        logger.warning(f"betti table and f_(n,l) differ at {sorted(residual)}")
    return GaleBettiComparison(table, residual)


def betti_of_polytope_via_gale_links(x: PointConfiguration, field: Field = Field.GF2) -> BettiTable:
    """Table of K(P) from links in the constellation complex of its Gale diagram.

    For i > 0, beta^{-i,2j}(K(P)) sums dim H~_{i-2}(link J) over faces J with m - j points.
    """
    delta = constellation_complex(x)
    counts: Counter = Counter({(0, 0): 1})
    for face in delta.faces():
        j = x.m - face.bit_count()
        for a, b in reduced_betti(link(delta, face), field).nonzero().items():
            counts[(a + 2, 2 * j)] += b
    return BettiTable(x.m, field, {key: value for key, value in sorted(counts.items()) if value})
