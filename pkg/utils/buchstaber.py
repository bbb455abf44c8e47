import functools
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from config.config import (
    BUCHSTABER_MAX_VERTICES,
    BUCHSTABER_NODE_BUDGET,
    DEPENDENCE_MAX_RANK,
    XI_MAX_RANK,
)
from utils.complex_core import SimplicialComplex, VertexSet, full_mask, is_face, members
from utils.errors import BudgetExceededError, CapExceededError, InputError, ZeroDirectionError
from utils.exact_linalg import (
    GF2Matrix,
    RationalVector,
    direction_in_open_hemisphere,
    dot,
    gf2_rank_of_rows,
    to_vector,
)
from utils.gale import PointConfiguration
from utils.polytope import Polytope, is_pyramid, nerve_KQ

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubgroupWitness:
    """Generator matrix of a subgroup of Z_2^m: m rows, r columns."""

    m: int
    r: int
    matrix: GF2Matrix

    def generators(self) -> list[VertexSet]:
        return [sum(self.matrix.entry(i, c) << i for i in range(self.m)) for c in range(self.r)]


@dataclass(frozen=True)
class RealInvariantResult:
    value: int
    witness: SubgroupWitness | None
    exact: bool
    nodes: int
    refuted_rank: int | None = None
    unknown_above: int | None = None


@dataclass(frozen=True)
class XiMap:
    """assignment[a - 1] is the minimal nonface assigned to the binary vector a."""

    k: int
    assignment: tuple[VertexSet, ...]

    def __call__(self, a: int) -> VertexSet:
        return self.assignment[a - 1]


@dataclass(frozen=True)
class XiSearchResult:
    xi: XiMap | None
    nodes: int
    complete: bool


@dataclass(frozen=True)
class Bound:
    value: int
    tag: str


@dataclass(frozen=True)
class SBoundsReport:
    s_lower: Bound
    s_upper: Bound
    s_real_lower: Bound
    s_real_upper: Bound

    @property
    def s_exact(self) -> int | None:
        return self.s_lower.value if self.s_lower.value == self.s_upper.value else None

    @property
    def s_real_exact(self) -> int | None:
        return self.s_real_lower.value if self.s_real_lower.value == self.s_real_upper.value else None


@dataclass(frozen=True)
class PyramidTheoremResult:
    s_is_one: bool
    apex: int | None
    disjoint_nonfaces: tuple[VertexSet, VertexSet] | None


def dimension_bound(k: SimplicialComplex) -> int:
    return k.m - k.dimension - 1


def _allowed_table(k: SimplicialComplex) -> bytearray:
    # allowed[v] = 1 iff the support of v is a nonface, i.e. v meets no coordinate stabilizer
    table = bytearray(1 << k.m)
    for v in range(1, 1 << k.m):
        if not is_face(k, v):
            table[v] = 1
    return table


class _SubgroupSearch:
    """Depth-first search over reduced echelon bases of r-dimensional subspaces of Z_2^m.

    Vector t has its lowest set bit at pivot p_t, pivots increase, and no vector has a bit at
    another vector's pivot, so every subspace is visited once.
    """

    def __init__(self, m: int, allowed: bytearray, budget: int):
        self.m = m
        self.allowed = allowed
        self.budget = budget
        self.nodes = 0

    def run(self, r: int) -> list[int] | None:
        return self._extend([], [0], 0, r)

    def _extend(self, basis: list[int], span: list[int], start: int, r: int) -> list[int] | None:
        if len(basis) == r:
            return basis
        used = 0
        for b in basis:
            used |= b
        for pivot in range(start, self.m - (r - len(basis)) + 1):
            if used >> pivot & 1:
                continue
            for free in range(1 << (self.m - pivot - 1)):
                vector = (1 << pivot) | (free << (pivot + 1))
                self.nodes += 1
                if self.nodes > self.budget:
                    raise BudgetExceededError(self.nodes)
                if all(self.allowed[vector ^ s] for s in span):
                    found = self._extend(basis + [vector], span + [vector ^ s for s in span], pivot + 1, r)
                    if found is not None:
                        return found
        return None


def _witness(m: int, basis: Sequence[int]) -> SubgroupWitness:
    rows = tuple(sum(((b >> i) & 1) << c for c, b in enumerate(basis)) for i in range(m))
    return SubgroupWitness(m, len(basis), GF2Matrix(m, len(basis), rows))


def validate_witness(k: SimplicialComplex, witness: SubgroupWitness) -> bool:
    """Rows outside every maximal face must still have full column rank."""
    if witness.m != k.m or witness.matrix.rows != k.m or witness.matrix.cols != witness.r:
        return False
    for face in k.maximal_faces:
        outside = [witness.matrix.data[i] for i in members(full_mask(k.m) & ~face)]
        if gf2_rank_of_rows(outside) != witness.r:
            return False
    return True


def s_real_exact(k: SimplicialComplex, r_max: int | None = None, budget: int | None = None) -> RealInvariantResult:
    """Real Buchstaber invariant by exhaustive search, raising r until a rank is refuted."""
    if k.m > BUCHSTABER_MAX_VERTICES:
        raise CapExceededError(f"{k.m} vertices exceeds the Buchstaber cap of {BUCHSTABER_MAX_VERTICES}")
    if k.is_full_simplex():
        return RealInvariantResult(0, None, True, 0)
    upper = dimension_bound(k)
    limit = upper if r_max is None else min(upper, r_max)
    search = _SubgroupSearch(k.m, _allowed_table(k), budget or BUCHSTABER_NODE_BUDGET)
    best: list[int] | None = None
    refuted = None
    for r in range(1, limit + 1):
        try:
            basis = search.run(r)
        except BudgetExceededError as e:
            value = len(best) if best else 0
            logger.warning(f"subgroup search stopped after {e.nodes} nodes; unknown above {value}")
            return RealInvariantResult(
                value, _witness(k.m, best) if best else None, False, e.nodes, unknown_above=value
            )
        if basis is None:
            refuted = r
            break
        best = basis
    value = len(best) if best else 0
    witness = _witness(k.m, best) if best else None
    if witness is not None and not validate_witness(k, witness):
        raise ArithmeticError(f"subgroup search produced an invalid witness of rank {value}")
    exact = refuted is not None or value == upper
    logger.info(f"s_R search on {k.m} vertices: value {value}, {search.nodes} nodes, exact={exact}")
    return RealInvariantResult(value, witness, exact, search.nodes, refuted_rank=refuted)


@functools.lru_cache(maxsize=None)
def minimal_odd_dependences(k: int) -> tuple[tuple[int, ...], ...]:
    """Odd minimal linear dependences of Z_2^k - {0}, vectors as ints, each sorted ascending."""
    if k > DEPENDENCE_MAX_RANK:
        raise CapExceededError(f"dependences of Z_2^{k} exceed the cap of {DEPENDENCE_MAX_RANK}")
    if k < 0:
        raise InputError(f"rank {k} is negative")
    found: list[tuple[int, ...]] = []

    def grow(chosen: list[int], basis: dict[int, int], start: int, total: int) -> None:
        # a dependence S = T + {sum T} is listed once, from T = S minus its largest element
        if len(chosen) >= 2 and len(chosen) % 2 == 0 and total > chosen[-1]:
            found.append(tuple(chosen) + (total,))
        for v in range(start, 1 << k):
            row = v
            while row and row.bit_length() - 1 in basis:
                row ^= basis[row.bit_length() - 1]
            if row:
                grow(chosen + [v], {**basis, row.bit_length() - 1: row}, v + 1, total ^ v)

    grow([], {}, 1, 0)
    return tuple(sorted(found, key=lambda s: (len(s), s)))


def dependences_by_max(k: int) -> dict[int, list[tuple[int, ...]]]:
    grouped: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for dependence in minimal_odd_dependences(k):
        grouped[dependence[-1]].append(dependence)
    return grouped


def validate_xi_map(k: SimplicialComplex, xi: XiMap) -> bool:
    nonfaces = set(k.minimal_nonfaces)
    if len(xi.assignment) != (1 << xi.k) - 1 or any(n not in nonfaces for n in xi.assignment):
        return False
    for dependence in minimal_odd_dependences(xi.k):
        common = full_mask(k.m)
        for a in dependence:
            common &= xi(a)
        if common:
            return False
    return True


def s_real_lower_via_xi(k: SimplicialComplex, rank: int, budget: int | None = None) -> XiSearchResult:
    """Backtracking for xi: Z_2^rank - {0} -> N(K) with empty intersections on odd dependences."""
    if rank > XI_MAX_RANK:
        raise CapExceededError(f"xi rank {rank} exceeds the cap of {XI_MAX_RANK}")
    if rank < 1:
        raise InputError(f"xi rank must be positive, got {rank}")
    nonfaces = k.minimal_nonfaces
    grouped = dependences_by_max(rank)
    size = 1 << rank
    assignment = [0] * size
    limit = budget or BUCHSTABER_NODE_BUDGET
    nodes = 0

    def assign(a: int) -> bool:
        nonlocal nodes
        if a == size:
            return True
        for n in nonfaces:
            nodes += 1
            if nodes > limit:
                raise BudgetExceededError(nodes)
            assignment[a] = n
            ok = True
            for dependence in grouped.get(a, ()):
                common = n
                for b in dependence[:-1]:
                    common &= assignment[b]
                if common:
                    ok = False
                    break
            if ok and assign(a + 1):
                return True
        return False

    try:
        found = assign(1)
    except BudgetExceededError as e:
        logger.warning(f"xi search for rank {rank} stopped after {e.nodes} nodes")
        return XiSearchResult(None, e.nodes, False)
    logger.info(f"xi search for rank {rank}: {'found' if found else 'exhausted'} after {nodes} nodes")
    if not found:
        return XiSearchResult(None, nodes, True)
    xi = XiMap(rank, tuple(assignment[1:]))
    if not validate_xi_map(k, xi):
        raise ArithmeticError("xi search produced a map violating a dependence")
    return XiSearchResult(xi, nodes, True)


def erokhovets_lower_bound(k: SimplicialComplex) -> int:
    """2 when K has three minimal nonfaces or two disjoint ones, else 1."""
    nonfaces = k.minimal_nonfaces
    if len(nonfaces) >= 3:
        return 2
    if len(nonfaces) == 2 and not nonfaces[0] & nonfaces[1]:
        return 2
    return 1


def s_bounds(k: SimplicialComplex) -> SBoundsReport:
    if k.is_full_simplex():
        raise InputError("Buchstaber bounds need a complex other than the full simplex")
    upper = dimension_bound(k)
    real_lower = Bound(1, "diagonal")
    real_upper = Bound(upper, "dimension")
    if erokhovets_lower_bound(k) == 2 and upper >= 2:
        real_lower = Bound(2, "erokhovets-2")
    if k.m <= BUCHSTABER_MAX_VERTICES:
        result = s_real_exact(k)
        if result.value > real_lower.value:
            real_lower = Bound(result.value, "matrix-witness")
        if result.exact:
            real_upper = Bound(result.value, "matrix-witness")
        else:
            for rank in range(real_lower.value + 1, min(XI_MAX_RANK, real_upper.value) + 1):
                if s_real_lower_via_xi(k, rank).xi is None:
                    break
                real_lower = Bound(rank, "xi-witness")

    s_lower = Bound(1, "diagonal")
    if erokhovets_lower_bound(k) == 2 and upper >= 2:
        s_lower = Bound(2, "erokhovets-2")
    s_upper = real_upper
    pinned = real_upper.value == real_lower.value
    if pinned and (real_upper.value in (1, 2) or k.dimension <= 2):
        s_lower = Bound(real_upper.value, "equality-case")
        s_upper = Bound(real_upper.value, "equality-case")
    return SBoundsReport(s_lower, s_upper, real_lower, real_upper)


def s_equals_one(p: Polytope) -> PyramidTheoremResult:
    """s(P) = 1 exactly for pyramids, decided on K_P = K(P*) and cross-checked with the apex."""
    kp = nerve_KQ(p)
    apex = is_pyramid(p)
    s_is_one = kp.dimension == kp.m - 2
    if s_is_one != (apex is not None):
        logger.warning(f"K_P dimension test says {s_is_one}, apex search says {apex}")
    if s_is_one:
        return PyramidTheoremResult(True, apex, None)
    nonfaces = kp.minimal_nonfaces
    for i, first in enumerate(nonfaces):
        for second in nonfaces[i + 1:]:
            if not first & second:
                return PyramidTheoremResult(False, apex, (first, second))
    logger.warning("non-pyramid without a disjoint pair of minimal nonfaces in K_P")
    return PyramidTheoremResult(False, apex, None)


def _check_directions(eta: Sequence[RationalVector], rank: int) -> list[RationalVector]:
    directions = [to_vector(e) for e in eta]
    if len(directions) != (1 << rank) - 1:
        raise InputError(f"{len(directions)} directions for {(1 << rank) - 1} binary vectors")
    for a, direction in enumerate(directions, start=1):
        if all(c == 0 for c in direction):
            raise ZeroDirectionError(f"direction assigned to {a:0{rank}b} is zero")
    return directions


def eta_certificate_check(x: PointConfiguration, rank: int, eta: Sequence[Sequence]) -> bool:
    """Every point lies in some H(eta(a)) along every odd minimal dependence."""
    directions = _check_directions(eta, rank)
    for dependence in minimal_odd_dependences(rank):
        for point in x.points:
            if not any(dot(directions[a - 1], point) > 0 for a in dependence):
                return False
    return True


def eta_from_xi(x: PointConfiguration, xi: XiMap) -> list[RationalVector]:
    """eta(a): a direction whose open hemisphere holds the points outside xi(a).

    xi must map into nonfaces of the Alexander dual of the constellation complex of x.
    """
    directions = []
    for a in range(1, 1 << xi.k):
        outside = [x.points[i] for i in members(full_mask(x.m) & ~xi(a))]
        direction = direction_in_open_hemisphere(outside, x.dim)
        if direction is None:
            raise InputError(f"points outside xi({a:0{xi.k}b}) fit no open hemisphere")
        directions.append(direction)
    return directions
