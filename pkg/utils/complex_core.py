import functools
import itertools
import logging
import random
import threading
from typing import Iterable, Iterator, Sequence

from utils.errors import DualUndefinedError, InputError, NotAFaceError, VertexRangeError

logger = logging.getLogger(__name__)

# A vertex set is an int bitmask over {0..m-1}.
VertexSet = int

MAX_VERTICES = 64


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> tuple[int, ...]:
    out = []
    index = 0
    while mask:
        if mask & 1:
            out.append(index)
        mask >>= 1
        index += 1
    return tuple(out)


def full_mask(m: int) -> VertexSet:
    return (1 << m) - 1


def submasks(mask: VertexSet) -> Iterator[VertexSet]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def antichain_maximal(sets: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Inclusion-maximal members, sorted ascending."""
    kept: list[VertexSet] = []
    for s in sorted(set(sets), key=lambda x: -x.bit_count()):
        if not any(s & k == s for k in kept):
            kept.append(s)
    return tuple(sorted(kept))


def antichain_minimal(sets: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Inclusion-minimal members, sorted ascending."""
    kept: list[VertexSet] = []
    for s in sorted(set(sets), key=lambda x: x.bit_count()):
        if not any(k & s == k for k in kept):
            kept.append(s)
    return tuple(sorted(kept))


def minimal_transversals(edges: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Minimal sets meeting every edge (Berge's incremental method).

    An empty edge cannot be met, so it yields no transversals at all.
    """
    transversals = [0]
    for edge in antichain_minimal(edges):
        grown = set()
        for t in transversals:
            if t & edge:
                grown.add(t)
            else:
                bits = edge
                while bits:
                    low = bits & -bits
                    grown.add(t | low)
                    bits ^= low
        transversals = list(antichain_minimal(grown))
        if not transversals:
            break
    return tuple(sorted(transversals))


def _check_universe(m: int, sets: Iterable[VertexSet]) -> list[VertexSet]:
    if not 0 <= m <= MAX_VERTICES:
        raise VertexRangeError(f"vertex universe of size {m} is outside 0..{MAX_VERTICES}")
    out = []
    limit = full_mask(m)
    for s in sets:
        if s < 0 or s & ~limit:
            raise VertexRangeError(f"vertex index {s.bit_length() - 1} is not below m = {m}")
        out.append(s)
    return out


def compress_mask(mask: VertexSet, positions: Sequence[int]) -> VertexSet:
    out = 0
    for new, old in enumerate(positions):
        if mask >> old & 1:
            out |= 1 << new
    return out


class SimplicialComplex:
    """Simplicial complex on the universe {0..m-1}, stored by its maximal faces.

    Vertices outside every face are ghost vertices. `labels[i]` is the name of local vertex i
    in the complex this one was cut from (identity for top-level complexes). Instances are
    immutable; the minimal nonfaces are computed once on first use.
    """

    def __init__(self, m: int, maximal_faces: Iterable[VertexSet], labels: Sequence[int] | None = None):
        faces = _check_universe(m, maximal_faces)
        self._m = m
        self._maximal_faces = antichain_maximal(faces or [0])
        self._labels = tuple(labels) if labels is not None else tuple(range(m))
        if len(self._labels) != m:
            raise InputError(f"{len(self._labels)} labels for {m} vertices")
        self._nonfaces: tuple[VertexSet, ...] | None = None
        self._lock = threading.Lock()

    @property
    def m(self) -> int:
        return self._m

    @property
    def maximal_faces(self) -> tuple[VertexSet, ...]:
        return self._maximal_faces

    @property
    def labels(self) -> tuple[int, ...]:
        return self._labels

    @property
    def minimal_nonfaces(self) -> tuple[VertexSet, ...]:
        if self._nonfaces is None:
            with self._lock:
                if self._nonfaces is None:
                    complements = [full_mask(self._m) & ~f for f in self._maximal_faces]
                    self._nonfaces = minimal_transversals(complements)
        return self._nonfaces

    @property
    def dimension(self) -> int:
        return max(f.bit_count() for f in self._maximal_faces) - 1

    @property
    def ghost_vertices(self) -> tuple[int, ...]:
        covered = 0
        for f in self._maximal_faces:
            covered |= f
        return members(full_mask(self._m) & ~covered)

    def is_full_simplex(self) -> bool:
        return self._maximal_faces == (full_mask(self._m),)

    def relabel(self, labels: Sequence[int]) -> "SimplicialComplex":
        return SimplicialComplex(self._m, self._maximal_faces, labels)

    def faces(self) -> list[VertexSet]:
        seen: set[VertexSet] = set()
        for f in self._maximal_faces:
            seen.update(submasks(f))
        return sorted(seen, key=lambda s: (s.bit_count(), s))

    def faces_by_dimension(self) -> dict[int, list[VertexSet]]:
        out: dict[int, list[VertexSet]] = {}
        for face in self.faces():
            out.setdefault(face.bit_count() - 1, []).append(face)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._m == other._m and self._maximal_faces == other._maximal_faces

    def __hash__(self) -> int:
        return hash((self._m, self._maximal_faces))

    def __repr__(self) -> str:
        faces = [list(members(f)) for f in self._maximal_faces]
        return f"SimplicialComplex(m={self._m}, maximal_faces={faces})"


def from_maximal_faces(m: int, faces: Iterable[Iterable[int] | VertexSet]) -> SimplicialComplex:
    masks = [f if isinstance(f, int) else vertex_set(f) for f in faces]
    return SimplicialComplex(m, masks)


def from_minimal_nonfaces(m: int, nonfaces: Iterable[Iterable[int] | VertexSet]) -> SimplicialComplex:
    masks = _check_universe(m, [f if isinstance(f, int) else vertex_set(f) for f in nonfaces])
    if 0 in masks:
        raise InputError("the empty set is a face of every complex and cannot be a nonface")
    # I is a face iff its complement meets every nonface.
    maximal = [full_mask(m) & ~t for t in minimal_transversals(masks)]
    complex_ = SimplicialComplex(m, maximal)
    complex_._nonfaces = antichain_minimal(masks)
    return complex_


def full_simplex(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, [full_mask(m)])


def simplex_boundary(m: int) -> SimplicialComplex:
    return from_minimal_nonfaces(m, [full_mask(m)])


def is_face(k: SimplicialComplex, face: VertexSet | Iterable[int]) -> bool:
    mask = face if isinstance(face, int) else vertex_set(face)
    return any(mask & f == mask for f in k.maximal_faces)


def is_subcomplex(inner: SimplicialComplex, outer: SimplicialComplex) -> bool:
    return inner.m == outer.m and all(is_face(outer, f) for f in inner.maximal_faces)


def minimal_nonfaces(k: SimplicialComplex) -> tuple[VertexSet, ...]:
    return k.minimal_nonfaces


def alexander_dual(k: SimplicialComplex) -> SimplicialComplex:
    if k.is_full_simplex():
        raise DualUndefinedError()
    universe = full_mask(k.m)
    dual = SimplicialComplex(k.m, [universe & ~n for n in k.minimal_nonfaces], k.labels)
    dual._nonfaces = tuple(sorted(universe & ~f for f in k.maximal_faces))
    return dual


def link(k: SimplicialComplex, face: VertexSet | Iterable[int]) -> SimplicialComplex:
    """Link of a face, on the universe [m] minus the face, ghost vertices kept."""
    mask = face if isinstance(face, int) else vertex_set(face)
    if not is_face(k, mask):
        raise NotAFaceError(f"{list(members(mask))} is not a face, its link is undefined")
    positions = members(full_mask(k.m) & ~mask)
    faces = [compress_mask(f & ~mask, positions) for f in k.maximal_faces if f & mask == mask]
    return SimplicialComplex(len(positions), faces, [k.labels[p] for p in positions])


def full_subcomplex(k: SimplicialComplex, vertices: VertexSet | Iterable[int]) -> SimplicialComplex:
    mask = vertices if isinstance(vertices, int) else vertex_set(vertices)
    _check_universe(k.m, [mask])
    positions = members(mask)
    faces = [compress_mask(f & mask, positions) for f in k.maximal_faces]
    return SimplicialComplex(len(positions), faces, [k.labels[p] for p in positions])


def skeleton(k: SimplicialComplex, dim: int) -> SimplicialComplex:
    if dim < -1:
        raise InputError(f"skeleton dimension {dim} is below -1")
    size = dim + 1
    faces: list[VertexSet] = []
    for f in k.maximal_faces:
        if f.bit_count() <= size:
            faces.append(f)
        else:
            faces.extend(vertex_set(c) for c in itertools.combinations(members(f), size))
    return SimplicialComplex(k.m, faces, k.labels)


def join(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    m = first.m + second.m
    faces = [a | (b << first.m) for a in first.maximal_faces for b in second.maximal_faces]
    return SimplicialComplex(m, faces)


def cone(k: SimplicialComplex) -> SimplicialComplex:
    """Cone with the apex appended as vertex m."""
    return join(k, full_simplex(1))


def wedge_multiply(k: SimplicialComplex, multiplicities: Sequence[int]) -> SimplicialComplex:
    """Iterated simplicial wedge: vertex i becomes l_i consecutive copies.

    Each minimal nonface is replaced by the union of the copies of its vertices; the
    result's labels give the original vertex of each copy.
    """
    if len(multiplicities) != k.m:
        raise InputError(f"{len(multiplicities)} multiplicities for {k.m} vertices")
    if any(l < 1 for l in multiplicities):
        raise InputError("every multiplicity must be at least 1")
    copies = []
    offset = 0
    for l in multiplicities:
        copies.append(((1 << l) - 1) << offset)
        offset += l
    nonfaces = []
    for n in k.minimal_nonfaces:
        union = 0
        for v in members(n):
            union |= copies[v]
        nonfaces.append(union)
    wedged = from_minimal_nonfaces(offset, nonfaces)
    labels = [v for v, l in enumerate(multiplicities) for _ in range(l)]
    return wedged.relabel(labels)


def is_flag(k: SimplicialComplex) -> bool:
    return all(n.bit_count() == 2 for n in k.minimal_nonfaces)


def f_vector(k: SimplicialComplex) -> list[int]:
    """(f_-1, f_0, ..., f_dim)."""
    counts = [0] * (k.dimension + 2)
    for face in k.faces():
        counts[face.bit_count()] += 1
    return counts


def all_complexes(m: int) -> Iterator[SimplicialComplex]:
    """Every simplicial complex on [m] (ghost vertices allowed), each exactly once."""
    subsets = sorted(range(1 << m), key=lambda s: (-s.bit_count(), s))

    def extend(index: int, chosen: list[VertexSet]) -> Iterator[list[VertexSet]]:
        if index == len(subsets):
            yield chosen
            return
        s = subsets[index]
        if not any(s & c == s for c in chosen):
            yield from extend(index + 1, chosen + [s])
        yield from extend(index + 1, chosen)

    for antichain in extend(0, []):
        if antichain:
            yield SimplicialComplex(m, antichain)


def canonical_form(m: int, faces: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Smallest sorted relabelling of an antichain, over the permutations of [m] that list
    vertices in order of their face-size signature. Equal exactly on isomorphic antichains.
    """
    faces = tuple(faces)
    signature = [tuple(sorted(f.bit_count() for f in faces if f >> v & 1)) for v in range(m)]
    order = sorted(range(m), key=lambda v: signature[v])
    blocks = [list(group) for _, group in itertools.groupby(order, key=lambda v: signature[v])]
    best: tuple[VertexSet, ...] | None = None
    for arrangement in itertools.product(*(itertools.permutations(block) for block in blocks)):
        position = {v: i for i, v in enumerate(itertools.chain.from_iterable(arrangement))}
        image = tuple(sorted(sum(1 << position[v] for v in members(f)) for f in faces))
        if best is None or image < best:
            best = image
    return best if best is not None else ()


@functools.lru_cache(maxsize=8)
def complexes_up_to_isomorphism(m: int) -> tuple[SimplicialComplex, ...]:
    """One complex per isomorphism class on [m] (ghost vertices allowed).

    Classes are grown one maximal face at a time: every class with t + 1 maximal faces is
    some class with t faces plus one incomparable set.
    """
    level = {canonical_form(m, (s,)) for s in range(1 << m)}
    seen = set(level)
    out = []
    while level:
        out.extend(SimplicialComplex(m, faces) for faces in sorted(level))
        grown = set()
        for faces in level:
            for s in range(1 << m):
                if any(s & f == s or s & f == f for f in faces):
                    continue
                key = canonical_form(m, faces + (s,))
                if key not in seen:
                    seen.add(key)
                    grown.add(key)
        level = grown
    logger.info(f"{len(out)} isomorphism classes of complexes on {m} vertices")
    return tuple(out)


def random_complex(m: int, rng: random.Random, max_faces: int = 6) -> SimplicialComplex:
    count = rng.randint(1, max_faces)
    return SimplicialComplex(m, [rng.getrandbits(m) if m else 0 for _ in range(count)])
