import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from utils.complex_core import SimplicialComplex, members
from utils.errors import InputError
from utils.exact_linalg import GF2Matrix, RationalMatrix, gf2_rank_of_rows, rank_rational

logger = logging.getLogger(__name__)


class Field(str, Enum):
    GF2 = "gf2"
    Q = "q"


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers b_-1, b_0, ..., b_dim; values[p + 1] is b_p."""

    field: Field
    values: tuple[int, ...]

    def get(self, p: int) -> int:
        if -1 <= p < len(self.values) - 1:
            return self.values[p + 1]
        return 0

    def nonzero(self) -> dict[int, int]:
        return {p - 1: b for p, b in enumerate(self.values) if b}

    def is_zero(self) -> bool:
        return not any(self.values)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (p - 1) * b for p, b in enumerate(self.values))


def _faces_and_index(k: SimplicialComplex) -> tuple[dict[int, list[int]], dict[int, dict[int, int]]]:
    by_dim = k.faces_by_dimension()
    index = {d: {face: i for i, face in enumerate(faces)} for d, faces in by_dim.items()}
    return by_dim, index


def boundary_matrix(k: SimplicialComplex, p: int, field: Field = Field.GF2) -> GF2Matrix | RationalMatrix:
    """Matrix of the reduced boundary map from p-faces (columns) to (p-1)-faces (rows).

    The empty face is the single (-1)-dimensional generator, so the map on vertices is the
    all-ones row. Over Q a face loses its t-th vertex (ascending order) with sign (-1)^t.
    """
    if not -1 <= p <= k.dimension:
        raise InputError(f"boundary degree {p} outside -1..{k.dimension}")
    by_dim, index = _faces_and_index(k)
    columns = by_dim.get(p, [])
    rows = by_dim.get(p - 1, [])
    row_index = index.get(p - 1, {})
    if field == Field.GF2:
        bits = [[0] * len(columns) for _ in rows]
        for j, face in enumerate(columns):
            for v in members(face):
                bits[row_index[face & ~(1 << v)]][j] = 1
        return GF2Matrix.from_bits(bits, len(columns))
    entries = [[Fraction(0)] * len(columns) for _ in rows]
    for j, face in enumerate(columns):
        for t, v in enumerate(members(face)):
            entries[row_index[face & ~(1 << v)]][j] = Fraction((-1) ** t)
    return RationalMatrix.from_rows(entries, len(columns))


def _boundary_rank(k: SimplicialComplex, p: int, field: Field, by_dim, index) -> int:
    columns = by_dim.get(p, [])
    if p <= -1 or not columns:
        return 0
    row_index = index[p - 1]
    if field == Field.GF2:
        # rank is transpose invariant, so pack each column as one row of bits
        packed = []
        for face in columns:
            bits = 0
            for v in members(face):
                bits |= 1 << row_index[face & ~(1 << v)]
            packed.append(bits)
        return gf2_rank_of_rows(packed)
    return rank_rational(boundary_matrix(k, p, field))


def reduced_betti(k: SimplicialComplex, field: Field = Field.GF2) -> BettiVector:
    by_dim, index = _faces_and_index(k)
    top = k.dimension
    ranks = {p: _boundary_rank(k, p, field, by_dim, index) for p in range(0, top + 1)}
    values = []
    for p in range(-1, top + 1):
        cycles = len(by_dim.get(p, [])) - ranks.get(p, 0)
        values.append(cycles - ranks.get(p + 1, 0))
    return BettiVector(field, tuple(values))


def is_homology_sphere_like(k: SimplicialComplex, field: Field = Field.GF2, r: int = 0) -> bool:
    betti = reduced_betti(k, field)
    return betti.nonzero() == {r: 1}


def euler_characteristic(k: SimplicialComplex) -> int:
    """Reduced Euler characteristic from the f-vector, f_-1 included."""
    return sum((-1) ** face.bit_count() * -1 for face in k.faces())
