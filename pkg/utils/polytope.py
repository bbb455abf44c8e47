import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from utils.complex_core import (
    SimplicialComplex,
    VertexSet,
    full_mask,
    full_simplex,
    is_subcomplex,
    members,
    skeleton,
)
from utils.errors import DuplicatePointError, InputError, NotExtremeError
from utils.exact_linalg import (
    RationalMatrix,
    RationalVector,
    affine_rank,
    as_vectors,
    dot,
    kernel_basis,
    pivot_columns,
    zero_in_convex_hull,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Polytope:
    """Convex hull of its vertices, with the vertex-facet incidences computed once.

    `facets[t]` is the set of vertices lying on facet t; facets are sorted by that mask.
    """

    vertices: tuple[RationalVector, ...]
    ambient_dimension: int
    dimension: int
    facets: tuple[VertexSet, ...]

    @property
    def m(self) -> int:
        return len(self.vertices)


def _project(vectors: list[RationalVector], n: int) -> list[RationalVector]:
    # Coordinates at the pivot columns of the difference rows are an affine chart of the hull.
    origin = vectors[0]
    differences = [[a - b for a, b in zip(v, origin)] for v in vectors[1:]]
    pivots = pivot_columns(differences, n)
    return [tuple(v[c] for c in pivots) for v in vectors]


def _facets(points: list[RationalVector], d: int) -> tuple[VertexSet, ...]:
    if d == 0:
        return (0,)
    found: set[VertexSet] = set()
    for subset in itertools.combinations(range(len(points)), d):
        rows = [list(points[s]) + [Fraction(-1)] for s in subset]
        normals = kernel_basis(RationalMatrix.from_rows(rows, d + 1))
        if normals.cols != 1:
            continue
        normal = normals.column(0)
        values = [dot(normal[:d], p) - normal[d] for p in points]
        if all(v >= 0 for v in values) or all(v <= 0 for v in values):
            found.add(sum(1 << j for j, v in enumerate(values) if v == 0))
    return tuple(sorted(found))


def polytope_from_vertices(points: Iterable[Iterable]) -> Polytope:
    vectors, n = as_vectors(points)
    if not vectors:
        raise InputError("a polytope needs at least one vertex")
    seen: dict[RationalVector, int] = {}
    for i, v in enumerate(vectors):
        if v in seen:
            raise DuplicatePointError(f"points {seen[v]} and {i} coincide")
        seen[v] = i
    for k, y in enumerate(vectors):
        others = [tuple(a - b for a, b in zip(v, y)) for j, v in enumerate(vectors) if j != k]
        if zero_in_convex_hull(others):
            raise NotExtremeError(k)
    d = affine_rank(vectors)
    facets = _facets(_project(vectors, n), d)
    logger.debug(f"polytope with {len(vectors)} vertices, dim {d}, {len(facets)} facets")
    return Polytope(tuple(vectors), n, d, facets)


def face_lattice(p: Polytope) -> list[tuple[VertexSet, int]]:
    """Every face as (vertex set, dimension), the empty face and P itself included."""
    faces = set(p.facets)
    while True:
        grown = faces | {a & b for a in faces for b in p.facets}
        if grown == faces:
            break
        faces = grown
    faces.discard(full_mask(p.m))
    out = [(0, -1)] if 0 not in faces else []
    for face in faces:
        out.append((face, affine_rank([p.vertices[v] for v in members(face)])))
    out.append((full_mask(p.m), p.dimension))
    return sorted(out, key=lambda item: (item[1], item[0]))


def lattice_from_nerve(k: SimplicialComplex) -> list[tuple[VertexSet, int]]:
    """Face lattice read off K(P) alone: faces are intersections of the maximal faces of
    K(P), and a face's dimension is the length of the longest chain below it, minus one.
    """
    whole = full_mask(k.m)
    faces = set(k.maximal_faces)
    while True:
        grown = faces | {a & b for a in faces for b in k.maximal_faces}
        if grown == faces:
            break
        faces = grown
    faces |= {0, whole}
    rank: dict[VertexSet, int] = {}
    for face in sorted(faces, key=lambda f: (f.bit_count(), f)):
        below = [rank[g] for g in rank if g != face and g & face == g]
        rank[face] = max(below) + 1 if below else -1
    return sorted(((face, dim) for face, dim in rank.items()), key=lambda item: (item[1], item[0]))


def nerve_KP(p: Polytope) -> SimplicialComplex:
    return SimplicialComplex(p.m, p.facets)


def nerve_KQ(p: Polytope) -> SimplicialComplex:
    """Nerve of the facet cover: facets indexed as in `p.facets`."""
    faces = []
    for v in range(p.m):
        faces.append(sum(1 << t for t, facet in enumerate(p.facets) if facet >> v & 1))
    return SimplicialComplex(len(p.facets), faces)


def f_nl(p: Polytope) -> dict[tuple[int, int], int]:
    """Number of proper faces of dimension n with l vertices, keyed by (n, l)."""
    counts = Counter(
        (dim, face.bit_count()) for face, dim in face_lattice(p) if face != full_mask(p.m)
    )
    return dict(sorted(counts.items()))


def polytope_f_vector(p: Polytope) -> list[int]:
    """(f_-1, f_0, ..., f_(d-1)) of the proper faces."""
    counts = [0] * (p.dimension + 1)
    for face, dim in face_lattice(p):
        if face != full_mask(p.m):
            counts[dim + 1] += 1
    return counts


def is_simplicial(p: Polytope) -> bool:
    return all(f.bit_count() == p.dimension for f in p.facets)


def is_pyramid(p: Polytope) -> int | None:
    """Smallest apex index, or None when P is not a pyramid."""
    facets = set(p.facets)
    for i in range(p.m):
        if full_mask(p.m) & ~(1 << i) in facets:
            return i
    return None


def is_k_neighborly(p: Polytope, k: int) -> bool:
    if k < 0:
        raise InputError(f"neighborliness order {k} is negative")
    if k == 0:
        return True
    return is_subcomplex(skeleton(full_simplex(p.m), k - 1), nerve_KP(p))


# Vertex lists for the bundled corpus; every coordinate is an integer.

def simplex_vertices(d: int) -> list[list[int]]:
    return [[0] * d] + [[1 if c == i else 0 for c in range(d)] for i in range(d)]


def cube_vertices(d: int) -> list[list[int]]:
    return [[(i >> c) & 1 for c in range(d)] for i in range(1 << d)]


def crosspolytope_vertices(d: int) -> list[list[int]]:
    """Vertices e_0, -e_0, e_1, -e_1, ... so that 2t and 2t+1 are opposite."""
    out = []
    for i in range(d):
        for sign in (1, -1):
            out.append([sign if c == i else 0 for c in range(d)])
    return out


def cyclic_vertices(m: int, d: int, parameters: Sequence[int] | None = None) -> list[list[int]]:
    """Points (t, t^2, ..., t^d) on the moment curve, t = 1..m unless given."""
    ts = list(parameters) if parameters is not None else list(range(1, m + 1))
    if len(ts) != m:
        raise InputError(f"{len(ts)} moment-curve parameters for {m} points")
    return [[t ** e for e in range(1, d + 1)] for t in ts]


def prism_vertices(base: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(v) + [0] for v in base] + [list(v) + [1] for v in base]


def pyramid_vertices(base: Sequence[Sequence[int]]) -> list[list[int]]:
    """Base at height 0 followed by the apex over the base's first vertex."""
    return [list(v) + [0] for v in base] + [list(base[0]) + [1]]


def polygon_vertices(count: int) -> list[list[int]]:
    """Integer convex polygon with `count` vertices on the parabola y = x^2."""
    if count < 3:
        raise InputError(f"a polygon needs at least 3 vertices, got {count}")
    return [[x, x * x] for x in range(count)]
