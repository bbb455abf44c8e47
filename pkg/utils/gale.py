import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from utils.complex_core import (
    SimplicialComplex,
    VertexSet,
    alexander_dual,
    from_minimal_nonfaces,
    full_mask,
    full_subcomplex,
    is_face,
    is_flag,
    link,
    members,
    vertex_set,
)
from utils.errors import DimensionMismatchError, DualUndefinedError, InputError
from utils.exact_linalg import (
    ONE,
    ZERO,
    RationalMatrix,
    RationalVector,
    as_vectors,
    has_nonnegative_dependence,
    kernel_basis,
    rank_rational,
    strictly_positive_dependence,
)
from utils.homology import Field, is_homology_sphere_like, reduced_betti
from utils.polytope import Polytope, is_simplicial, nerve_KP

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointConfiguration:
    """m points of R^dim, each nonzero point standing for the ray through it.

    Zero points are allowed and become ghost vertices of the constellation complex. `labels`
    maps every point to the index it was copied from (identity unless multiplicities were set).
    """

    dim: int
    points: tuple[RationalVector, ...]
    labels: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def r(self) -> int:
        return self.dim - 1


def point_configuration(points: Iterable[Iterable], dim: int | None = None) -> PointConfiguration:
    vectors, n = as_vectors(points)
    if not vectors:
        if dim is None:
            raise InputError("an empty configuration needs an explicit dimension")
        n = dim
    elif dim is not None and dim != n:
        raise DimensionMismatchError(f"points live in R^{n}, configuration declares dim {dim}")
    return PointConfiguration(n, tuple(vectors), tuple(range(len(vectors))))


def _is_zero(point: RationalVector) -> bool:
    return all(x == 0 for x in point)


def gale_diagram(p: Polytope) -> PointConfiguration:
    """Rows of a kernel basis of the matrix with columns (y_i, 1).

    The kernel basis is in canonical echelon form, so the output is reproducible; any other
    basis gives a linearly equivalent configuration.
    """
    rows = [[v[c] for v in p.vertices] for c in range(p.ambient_dimension)]
    rows.append([ONE] * p.m)
    kernel = kernel_basis(RationalMatrix.from_rows(rows, p.m))
    logger.debug(f"gale diagram of {p.m} vertices in R^{kernel.cols}")
    return PointConfiguration(kernel.cols, kernel.entries, tuple(range(p.m)))


def constellation_complex(x: PointConfiguration) -> SimplicialComplex:
    """Nerve of the open hemispheres H(x_i).

    I is a nonface iff X(I) has a nonnegative nonzero dependence; minimal ones have at most
    dim + 1 points, so larger subsets are never examined.
    """
    nonfaces: list[VertexSet] = []
    for size in range(1, min(x.m, x.dim + 1) + 1):
        for subset in itertools.combinations(range(x.m), size):
            mask = vertex_set(subset)
            if any(n & mask == n for n in nonfaces):
                continue
            if has_nonnegative_dependence([x.points[i] for i in subset]):
                nonfaces.append(mask)
    logger.debug(f"constellation complex on {x.m} points: {len(nonfaces)} minimal nonfaces")
    return from_minimal_nonfaces(x.m, nonfaces).relabel(x.labels)


def covers_sphere(x: PointConfiguration) -> bool:
    if x.dim == 0:
        return True
    nonzero = [p for p in x.points if not _is_zero(p)]
    if not nonzero:
        return False
    full_rank = rank_rational(RationalMatrix.from_rows(nonzero, x.dim)) == x.dim
    return full_rank and strictly_positive_dependence(nonzero)


def remove_point(x: PointConfiguration, i: int) -> PointConfiguration:
    keep = [t for t in range(x.m) if t != i]
    return PointConfiguration(x.dim, tuple(x.points[t] for t in keep), tuple(x.labels[t] for t in keep))


def is_good(x: PointConfiguration) -> bool:
    """Every point of the sphere lies in at least two hemispheres."""
    return all(covers_sphere(remove_point(x, i)) for i in range(x.m))


def is_nondegenerate(x: PointConfiguration) -> bool:
    return all(n.bit_count() == x.dim + 1 for n in constellation_complex(x).minimal_nonfaces)


def with_multiplicities(x: PointConfiguration, multiplicities: Sequence[int]) -> PointConfiguration:
    if len(multiplicities) != x.m:
        raise InputError(f"{len(multiplicities)} multiplicities for {x.m} points")
    if any(j < 1 for j in multiplicities):
        raise InputError("every multiplicity must be at least 1")
    points = []
    labels = []
    for i, j in enumerate(multiplicities):
        points.extend([x.points[i]] * j)
        labels.extend([x.labels[i]] * j)
    return PointConfiguration(x.dim, tuple(points), tuple(labels))


def direct_sum(first: PointConfiguration, second: PointConfiguration) -> PointConfiguration:
    pad_first = (ZERO,) * second.dim
    pad_second = (ZERO,) * first.dim
    points = [p + pad_first for p in first.points] + [pad_second + p for p in second.points]
    labels = list(first.labels) + [first.m + label for label in second.labels]
    return PointConfiguration(first.dim + second.dim, tuple(points), tuple(labels))


def verify_gale_alexander(p: Polytope) -> bool:
    k = nerve_KP(p)
    if k.is_full_simplex():
        raise DualUndefinedError()
    dual = alexander_dual(k)
    delta = constellation_complex(gale_diagram(p))
    if dual != delta:
        logger.warning(f"K(P)^ {dual} differs from the constellation complex {delta}")
        return False
    return True


def sphere_property_violations(x: PointConfiguration, field: Field = Field.GF2) -> list[VertexSet]:
    """Subsets I whose full subcomplex is neither a simplex nor S^r-like.

    Only meaningful for nondegenerate covering configurations; anything else may report
    violations by design of the geometry, e.g. equatorial triples on S^2.
    """
    delta = constellation_complex(x)
    violations = []
    for size in range(x.m + 1):
        for subset in itertools.combinations(range(x.m), size):
            mask = vertex_set(subset)
            if is_face(delta, mask):
                continue
            if not is_homology_sphere_like(full_subcomplex(delta, mask), field, x.r):
                violations.append(mask)
    if violations:
        logger.info(f"{len(violations)} full subcomplexes are neither simplices nor {x.r}-spheres")
    return violations


def construction_step_check(x: PointConfiguration, field: Field = Field.GF2) -> bool:
    """Homology shadow of building the constellation complex by coning over acyclic links.

    Starts from a minimal nonface of size dim + 1, whose full subcomplex must be the boundary
    of a simplex, then adds the remaining vertices in ascending order; each new vertex must
    have an acyclic link in the partial complex.
    """
    delta = constellation_complex(x)
    start = next((n for n in delta.minimal_nonfaces if n.bit_count() == x.dim + 1), None)
    if start is None:
        return False
    if not is_homology_sphere_like(full_subcomplex(delta, start), field, x.r):
        return False
    current = start
    for w in members(full_mask(x.m) & ~start):
        current |= 1 << w
        partial = full_subcomplex(delta, current)
        local = members(current).index(w)
        if not is_face(partial, 1 << local):
            return False
        if not reduced_betti(link(partial, 1 << local), field).is_zero():
            logger.info(f"adding vertex {w} is not an acyclic construction step")
            return False
    return True


def is_flag_configuration(x: PointConfiguration) -> bool:
    """Every maximal face of the constellation complex has m - 2 points."""
    return all(f.bit_count() == x.m - 2 for f in constellation_complex(x).maximal_faces)


def max_faces_below_flag_bound(x: PointConfiguration) -> bool:
    """Past m = 2(r + 2) a good nondegenerate configuration has a maximal face with fewer than m - 2 points."""
    if x.m <= 2 * (x.r + 2) or not (is_good(x) and is_nondegenerate(x)):
        return True
    return not is_flag_configuration(x)


def flag_bound_holds(p: Polytope) -> bool:
    """A flag simplicial polytope has at least twice its dimension in vertices."""
    if not is_simplicial(p) or not is_flag(nerve_KP(p)):
        return True
    return p.m >= 2 * p.dimension


def polygon_configuration(k: int) -> PointConfiguration:
    """Integer stand-in for 2k + 1 equally spaced rays in the plane.

    Every ray lies strictly on the same side of each line through the origin and another ray
    as it does in the regular model, which is all the constellation complex sees.
    """
    if k < 1:
        raise InputError(f"polygon configurations need k >= 1, got {k}")
    count = 2 * k + 1
    points = _REGULAR_RAYS.get(count)
    if points is None:
        raise InputError(f"no rational stand-in stored for {count} rays")
    return point_configuration(points)


# Integer rays reproducing the order type of the regular (2k+1)-gon, k = 1..4.
_REGULAR_RAYS: dict[int, list[list[int]]] = {
    3: [[1, 0], [-1, 2], [-1, -2]],
    5: [[1, 0], [3, 10], [-4, 3], [-4, -3], [3, -10]],
    7: [[100, 0], [62, 78], [-22, 97], [-90, 43], [-90, -43], [-22, -97], [62, -78]],
    9: [
        [100, 0], [77, 64], [17, 98], [-50, 87], [-94, 34],
        [-94, -34], [-50, -87], [17, -98], [77, -64],
    ],
}

