import functools
import itertools
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from config.config import COLORING_MAX_RANK, FANO_CIRCLE_BOUND, FANO_CIRCLE_SEED, FANO_CIRCLE_TRIALS, THREADS
from utils.buchstaber import dependences_by_max, minimal_odd_dependences
from utils.errors import CapExceededError, InputError
from utils.exact_linalg import RationalVector, dot, to_vector

logger = logging.getLogger(__name__)

# 2D integer direction
Direction = tuple[int, int]


@dataclass(frozen=True)
class Coloring:
    """colors[a - 1] in 1..c is the color of the binary vector a."""

    k: int
    colors: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.colors[a - 1]

    @property
    def used(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class ColoringSearchResult:
    coloring: Coloring | None
    nodes: int


@dataclass(frozen=True)
class FanoReport:
    colorings: int
    with_single_colored_line: int

    @property
    def holds(self) -> bool:
        return self.colorings == self.with_single_colored_line


@dataclass(frozen=True)
class FanoCircleReport:
    trials: int
    seed: int
    counterexamples: int
    first_counterexample: list[Direction] | None


def is_proper_coloring(coloring: Coloring) -> bool:
    if len(coloring.colors) != (1 << coloring.k) - 1:
        return False
    return all(len({coloring(a) for a in dependence}) != 1 for dependence in minimal_odd_dependences(coloring.k))


def proper_coloring_search(k: int, c: int) -> ColoringSearchResult:
    """Backtracking over colorings; a vector may only open the next unused color."""
    if k > COLORING_MAX_RANK:
        raise CapExceededError(f"coloring rank {k} exceeds the cap of {COLORING_MAX_RANK}")
    if k < 1 or c < 1:
        raise InputError(f"need k >= 1 and at least one color, got k={k}, c={c}")
    grouped = dependences_by_max(k)
    size = 1 << k
    colors = [0] * size
    nodes = 0

    def assign(a: int, used: int) -> bool:
        nonlocal nodes
        if a == size:
            return True
        for color in range(1, min(c, used + 1) + 1):
            nodes += 1
            colors[a] = color
            if all(any(colors[b] != color for b in dependence[:-1]) for dependence in grouped.get(a, ())):
                if assign(a + 1, max(used, color)):
                    return True
        return False

    found = assign(1, 0)
    logger.info(f"coloring search k={k} c={c}: {'found' if found else 'exhausted'} after {nodes} nodes")
    if not found:
        return ColoringSearchResult(None, nodes)
    coloring = Coloring(k, tuple(colors[1:]))
    if not is_proper_coloring(coloring):
        raise ArithmeticError("coloring search returned an improper coloring")
    return ColoringSearchResult(coloring, nodes)


def fano_lines() -> list[tuple[int, int, int]]:
    return [line for line in minimal_odd_dependences(3) if len(line) == 3]


def fano_two_coloring_check() -> FanoReport:
    """Every 2-coloring of the Fano plane has a single-colored line."""
    lines = fano_lines()
    hits = 0
    total = 0
    for colors in itertools.product((1, 2), repeat=7):
        total += 1
        if any(colors[a - 1] == colors[b - 1] == colors[c - 1] for a, b, c in lines):
            hits += 1
    return FanoReport(total, hits)


def coloring_from_eta(points: Sequence[Sequence], eta: Sequence[Sequence], k: int) -> Coloring:
    """Color a by the first point outside the open hemisphere H(eta(a)).

    `points` are the distinct rays x_1..x_k; with eta certified on a doubled copy of them the
    coloring is proper.
    """
    rays: list[RationalVector] = [to_vector(p) for p in points]
    colors = []
    for a, direction in enumerate(eta, start=1):
        vector = to_vector(direction)
        color = next((j + 1 for j, x in enumerate(rays) if dot(vector, x) <= 0), None)
        if color is None:
            raise InputError(f"H(eta({a:0{k}b})) holds every point, so no color is forced")
        colors.append(color)
    return Coloring(k, tuple(colors))


def _cross(u: Direction, v: Direction) -> int:
    return u[0] * v[1] - u[1] * v[0]


def captures_origin(u: Direction, v: Direction, w: Direction) -> bool:
    """0 in conv{u, v, w} for nonzero integer vectors of the plane."""
    c1, c2, c3 = _cross(u, v), _cross(v, w), _cross(w, u)
    if c1 == c2 == c3 == 0:
        pairs = ((u, v), (v, w), (w, u))
        return any(a[0] * b[0] + a[1] * b[1] < 0 for a, b in pairs)
    return (c1 >= 0 and c2 >= 0 and c3 >= 0) or (c1 <= 0 and c2 <= 0 and c3 <= 0)


def fano_line_avoiding_origin(eta: Sequence[Direction]) -> tuple[int, int, int] | None:
    for a, b, c in fano_lines():
        if not captures_origin(eta[a - 1], eta[b - 1], eta[c - 1]):
            return (a, b, c)
    return None


def _random_direction(rng: random.Random, bound: int) -> Direction:
    while True:
        x, y = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if x or y:
            return (x, y)


def _run_trials(seed: int, bound: int, trial_ids: Sequence[int]) -> tuple[int, list[Direction] | None]:
    count = 0
    first = None
    for trial in trial_ids:
        rng = random.Random(seed * 1_000_003 + trial)
        eta = [_random_direction(rng, bound) for _ in range(7)]
        if fano_line_avoiding_origin(eta) is None:
            count += 1
            if first is None:
                first = eta
    return count, first


def fano_circle_experiment(
    trials: int | None = None, seed: int | None = None, bound: int | None = None, threads: int | None = None
) -> FanoCircleReport:
    """Random maps of the Fano plane to the circle; each must leave some line's rays off the origin."""
    trials = FANO_CIRCLE_TRIALS if trials is None else trials
    seed = FANO_CIRCLE_SEED if seed is None else seed
    bound = bound or FANO_CIRCLE_BOUND
    workers = threads or THREADS
    if trials < 1:
        raise InputError(f"trials must be at least 1, got {trials}")
    ids = list(range(trials))
    if workers <= 1:
        count, first = _run_trials(seed, bound, ids)
    else:
        chunk = -(-trials // workers)
        count, first = 0, None
        with ProcessPoolExecutor(max_workers=workers) as executor:
            parts = executor.map(
                functools.partial(_run_trials, seed, bound), [ids[s:s + chunk] for s in range(0, trials, chunk)]
            )
            for part_count, part_first in parts:
                count += part_count
                if first is None:
                    first = part_first
    if count:
        logger.warning(f"fano-circle: {count} maps with every line capturing the origin")
    logger.info(f"fano-circle: {trials} trials with seed {seed}, {count} counterexamples")
    return FanoCircleReport(trials, seed, count, first)
