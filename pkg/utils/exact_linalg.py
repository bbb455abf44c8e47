import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from utils.errors import DimensionMismatchError, InputError

logger = logging.getLogger(__name__)

RationalVector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value) -> Fraction:
    """Parse an int, a Fraction or a "p/q" / "p" string. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"expected a rational number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"not a rational number: {value!r}") from e
    raise InputError(f"expected an integer or a 'p/q' string, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    return str(value)


def to_vector(values: Iterable) -> RationalVector:
    return tuple(to_rational(x) for x in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[RationalVector, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise DimensionMismatchError(f"matrix entries do not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "RationalMatrix":
        data = tuple(to_vector(row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        data = tuple(tuple(to_rational(column[i]) for column in columns) for i in range(rows))
        return cls(rows, len(columns), data)

    def column(self, j: int) -> RationalVector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[RationalVector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, tuple(self.columns()))

    def apply(self, vector: Sequence[Fraction]) -> RationalVector:
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(vector)} against {self.cols} columns")
        return tuple(dot(row, vector) for row in self.entries)


@dataclass(frozen=True)
class GF2Matrix:
    """Bit-packed matrix over GF(2): bit j of data[i] is the entry (i, j)."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise DimensionMismatchError(f"expected {self.rows} packed rows, got {len(self.data)}")
        if any(row < 0 or row >> self.cols for row in self.data):
            raise DimensionMismatchError(f"packed row wider than {self.cols} columns")

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]], cols: int | None = None) -> "GF2Matrix":
        if cols is None:
            cols = len(bits[0]) if bits else 0
        data = []
        for row in bits:
            if len(row) != cols:
                raise DimensionMismatchError("ragged bit matrix")
            data.append(sum(1 << j for j, bit in enumerate(row) if bit & 1))
        return cls(len(data), cols, tuple(data))

    def entry(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def to_bits(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.cols)] for row in self.data]

    def select_rows(self, indices: Iterable[int]) -> "GF2Matrix":
        data = tuple(self.data[i] for i in indices)
        return GF2Matrix(len(data), self.cols, data)


def _rref(rows: Sequence[Sequence[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    matrix = [list(row) for row in rows]
    pivots: list[int] = []
    lead = 0
    for col in range(cols):
        if lead == len(matrix):
            break
        pivot = next((i for i in range(lead, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[lead], matrix[pivot] = matrix[pivot], matrix[lead]
        inverse = ONE / matrix[lead][col]
        matrix[lead] = [x * inverse for x in matrix[lead]]
        for i in range(len(matrix)):
            if i != lead and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[lead])]
        pivots.append(col)
        lead += 1
    return matrix, pivots


def pivot_columns(rows: Sequence[Sequence[Fraction]], cols: int) -> list[int]:
    """Leading columns of the reduced row echelon form of `rows`."""
    return _rref(rows, cols)[1]


def rank_rational(matrix: RationalMatrix) -> int:
    _, pivots = _rref(matrix.entries, matrix.cols)
    return len(pivots)


def kernel_basis(matrix: RationalMatrix) -> RationalMatrix:
    """Basis of {v : Mv = 0} as the columns of the result.

    The basis is returned in reduced row echelon form (taken as rows), so two calls on
    matrices with the same kernel give the same columns.
    """
    reduced, pivots = _rref(matrix.entries, matrix.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = [ZERO] * matrix.cols
        vector[free] = ONE
        for row, pivot in enumerate(pivots):
            vector[pivot] = -reduced[row][free]
        basis.append(vector)
    canonical, _ = _rref(basis, matrix.cols)
    canonical = canonical[: len(basis)]
    return RationalMatrix.from_columns(canonical, matrix.cols)


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull; -1 for no points."""
    if not points:
        return -1
    origin = points[0]
    differences = [[a - b for a, b in zip(point, origin)] for point in points[1:]]
    if not differences:
        return 0
    return len(_rref(differences, len(origin))[1])


def gf2_rank_of_rows(rows: Iterable[int]) -> int:
    """Rank of bit-packed GF(2) rows by XOR elimination on leading bits."""
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead in basis:
                row ^= basis[lead]
            else:
                basis[lead] = row
                break
    return len(basis)


def rank_gf2(matrix: GF2Matrix) -> int:
    return gf2_rank_of_rows(matrix.data)


def as_vectors(points: Iterable[Iterable]) -> tuple[list[RationalVector], int]:
    vectors = [to_vector(point) for point in points]
    dims = {len(v) for v in vectors}
    if len(dims) > 1:
        raise DimensionMismatchError(f"points of mixed dimensions {sorted(dims)}")
    return vectors, (dims.pop() if dims else 0)


def _convex_coefficients(subset: Sequence[RationalVector], n: int) -> list[Fraction] | None:
    # Unique solution of sum(l_t x_t) = 0, sum(l_t) = 1 when the subset is affinely independent.
    size = len(subset)
    rows = [[x[c] for x in subset] + [ZERO] for c in range(n)]
    rows.append([ONE] * size + [ONE])
    reduced, pivots = _rref(rows, size + 1)
    if size in pivots or len(pivots) < size:
        return None
    return [reduced[row][size] for row in range(size)]


def zero_in_convex_hull(points: Iterable[Iterable]) -> bool:
    """Carathéodory enumeration over affinely independent subsets of at most n+1 points."""
    vectors, n = as_vectors(points)
    for size in range(1, min(len(vectors), n + 1) + 1):
        for subset in itertools.combinations(vectors, size):
            coefficients = _convex_coefficients(subset, n)
            if coefficients is not None and all(c >= 0 for c in coefficients):
                return True
    return False


def has_nonnegative_dependence(points: Iterable[Iterable]) -> bool:
    """True iff some l >= 0, l != 0 has sum(l_i x_i) = 0.

    Normalising sum(l) = 1 makes this the same predicate as zero_in_convex_hull, and it is
    unchanged by rescaling each point with its own positive factor, so it is the form to use
    when points stand for rays.
    """
    return zero_in_convex_hull(points)


def _phase_one(a_rows: list[list[Fraction]], b: list[Fraction], n: int) -> list[Fraction] | None:
    """Some x >= 0 with Ax = b, or None. Exact first phase of the simplex method, Bland's rule."""
    if not a_rows:
        return [ZERO] * n
    m = len(a_rows)
    tableau = []
    for i, (row, rhs) in enumerate(zip(a_rows, b)):
        sign = -1 if rhs < 0 else 1
        artificial = [ZERO] * m
        artificial[i] = ONE
        tableau.append([sign * x for x in row] + artificial + [sign * rhs])
    basis = [n + i for i in range(m)]
    cost = [ZERO] * n + [ONE] * m
    total = n + m
    pivots = 0
    while True:
        entering = None
        for j in range(total):
            reduced_cost = cost[j] - sum((cost[basis[i]] * tableau[i][j] for i in range(m)), ZERO)
            if reduced_cost < 0:
                entering = j
                break
        if entering is None:
            break
        candidates = [
            (tableau[i][-1] / tableau[i][entering], basis[i], i)
            for i in range(m)
            if tableau[i][entering] > 0
        ]
        if not candidates:
            raise ArithmeticError("phase one objective is bounded below; no ratio row found")
        _, _, leave = min(candidates)
        pivot_value = tableau[leave][entering]
        tableau[leave] = [x / pivot_value for x in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][entering] != 0:
                factor = tableau[i][entering]
                tableau[i] = [a - factor * c for a, c in zip(tableau[i], tableau[leave])]
        basis[leave] = entering
        pivots += 1
    logger.debug(f"phase one finished after {pivots} pivots on {m}x{n}")
    objective = sum((cost[basis[i]] * tableau[i][-1] for i in range(m)), ZERO)
    if objective != 0:
        return None
    solution = [ZERO] * total
    for i in range(m):
        solution[basis[i]] = tableau[i][-1]
    return solution[:n]


def strictly_positive_dependence(points: Iterable[Iterable]) -> bool:
    """True iff some l with every l_i >= 1 has sum(l_i x_i) = 0."""
    vectors, n = as_vectors(points)
    if not vectors:
        return True
    # l = 1 + u with u >= 0
    a_rows = [[v[c] for v in vectors] for c in range(n)]
    b = [-sum((v[c] for v in vectors), ZERO) for c in range(n)]
    return _phase_one(a_rows, b, len(vectors)) is not None


def direction_in_open_hemisphere(points: Iterable[Iterable], dim: int | None = None) -> RationalVector | None:
    """A vector y with <y, x> > 0 for every point x, or None when no open hemisphere holds them."""
    vectors, n = as_vectors(points)
    if not vectors:
        if not dim:
            raise InputError("an empty point set needs a positive ambient dimension")
        return tuple(ONE if c == 0 else ZERO for c in range(dim))
    k = len(vectors)
    # <y, x_t> - s_t = 1 with y = y_plus - y_minus
    a_rows = []
    for t, v in enumerate(vectors):
        slack = [ZERO] * k
        slack[t] = -ONE
        a_rows.append(list(v) + [-x for x in v] + slack)
    solution = _phase_one(a_rows, [ONE] * k, 2 * n + k)
    if solution is None:
        return None
    return tuple(solution[c] - solution[n + c] for c in range(n))
