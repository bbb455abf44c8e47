import logging
from pathlib import Path
from typing import TypeVar

import orjson
from pydantic import BaseModel, ValidationError

from models.model import (
    BettiEntryModel,
    BettiTableModel,
    BoundModel,
    ColoringModel,
    ComplexModel,
    ConfigurationModel,
    FanoCircleModel,
    FanoModel,
    PolytopeModel,
    PyramidTheoremModel,
    RealInvariantModel,
    SBoundsModel,
    WitnessModel,
    XiEntryModel,
    XiModel,
)
from utils.betti import BettiTable, Degree
from utils.buchstaber import (
    Bound,
    PyramidTheoremResult,
    RealInvariantResult,
    SBoundsReport,
    SubgroupWitness,
    XiSearchResult,
)
from utils.combinatorics_z2 import ColoringSearchResult, FanoCircleReport, FanoReport
from utils.complex_core import SimplicialComplex, from_maximal_faces, from_minimal_nonfaces, members
from utils.errors import InputError
from utils.exact_linalg import format_rational
from utils.gale import PointConfiguration, point_configuration
from utils.homology import Field
from utils.polytope import Polytope, polytope_from_vertices

logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)


def parse_json(raw: bytes | str, source: str = "<input>"):
    try:
        return orjson.loads(raw)
    except orjson.JSONDecodeError as e:
        raise InputError(f"{source}: malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from e


def load_json(path: str | Path):
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    return parse_json(raw, str(path))


def validate_model(data, model: type[ModelT], source: str) -> ModelT:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        raise InputError(f"{source}: {error['msg']} at {list(error['loc'])}") from e


def load_model(path: str | Path, model: type[ModelT]) -> ModelT:
    return validate_model(load_json(path), model, str(path))


def load_any(path: str | Path) -> ComplexModel | PolytopeModel | ConfigurationModel:
    """Read a complex, polytope or configuration file, told apart by its keys."""
    data = load_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    if "vertices" in data:
        return validate_model(data, PolytopeModel, str(path))
    if "points" in data:
        return validate_model(data, ConfigurationModel, str(path))
    return validate_model(data, ComplexModel, str(path))


def dump_json(model: BaseModel | dict | list, exclude_none: bool = True) -> bytes:
    if isinstance(model, list):
        data = [m.model_dump(exclude_none=exclude_none) if isinstance(m, BaseModel) else m for m in model]
    else:
        data = model.model_dump(exclude_none=exclude_none) if isinstance(model, BaseModel) else model
    return orjson.dumps(data, option=orjson.OPT_INDENT_2 | orjson.OPT_NON_STR_KEYS)


def write_json(path: str | Path, model: BaseModel | dict | list, exclude_none: bool = True) -> None:
    Path(path).write_bytes(dump_json(model, exclude_none) + b"\n")
    logger.debug(f"wrote {path}")


def field_of(name: str | None, default: str) -> Field:
    try:
        return Field(name or default)
    except ValueError as e:
        raise InputError(f"unknown field {name!r}, expected gf2 or q") from e


def to_complex(model: ComplexModel) -> SimplicialComplex:
    if model.maximal_faces is not None:
        return from_maximal_faces(model.m, model.maximal_faces)
    return from_minimal_nonfaces(model.m, model.minimal_nonfaces)


def complex_to_model(k: SimplicialComplex, nonfaces: bool = False) -> ComplexModel:
    if nonfaces:
        return ComplexModel(m=k.m, minimal_nonfaces=[list(members(n)) for n in k.minimal_nonfaces])
    return ComplexModel(m=k.m, maximal_faces=[list(members(f)) for f in k.maximal_faces])


def to_polytope(model: PolytopeModel) -> Polytope:
    return polytope_from_vertices(model.vertices)


def polytope_to_model(p: Polytope) -> PolytopeModel:
    return PolytopeModel(vertices=[[format_rational(x) for x in v] for v in p.vertices])


def to_configuration(model: ConfigurationModel) -> PointConfiguration:
    return point_configuration(model.points, model.dim)


def configuration_to_model(x: PointConfiguration) -> ConfigurationModel:
    return ConfigurationModel(dim=x.dim, points=[[format_rational(c) for c in p] for p in x.points])


def entries_to_model(entries: dict[Degree, int]) -> list[BettiEntryModel]:
    return [BettiEntryModel(i=i, deg=deg, value=value) for (i, deg), value in sorted(entries.items())]


def betti_to_model(table: BettiTable) -> BettiTableModel:
    return BettiTableModel(field=table.field.value, m=table.m, entries=entries_to_model(table.entries))


def witness_to_model(witness: SubgroupWitness) -> WitnessModel:
    rows = ["".join(str(bit) for bit in row) for row in witness.matrix.to_bits()]
    return WitnessModel(m=witness.m, r=witness.r, rows=rows)


def real_invariant_to_model(result: RealInvariantResult) -> RealInvariantModel:
    return RealInvariantModel(
        value=result.value,
        exact=result.exact,
        nodes=result.nodes,
        refuted_rank=result.refuted_rank,
        unknown_above=result.unknown_above,
        witness=witness_to_model(result.witness) if result.witness else None,
    )


def xi_to_model(rank: int, result: XiSearchResult) -> XiModel:
    assignment = None
    if result.xi is not None:
        assignment = [
            XiEntryModel(a=f"{a:0{rank}b}", nonface=list(members(result.xi(a)))) for a in range(1, 1 << rank)
        ]
    return XiModel(k=rank, found=result.xi is not None, complete=result.complete, nodes=result.nodes, assignment=assignment)


def _bound(bound: Bound) -> BoundModel:
    return BoundModel(value=bound.value, tag=bound.tag)


def bounds_to_model(report: SBoundsReport) -> SBoundsModel:
    return SBoundsModel(
        s_lower=_bound(report.s_lower),
        s_upper=_bound(report.s_upper),
        s_real_lower=_bound(report.s_real_lower),
        s_real_upper=_bound(report.s_real_upper),
        s_exact=report.s_exact,
        s_real_exact=report.s_real_exact,
    )


def pyramid_theorem_to_model(result: PyramidTheoremResult) -> PyramidTheoremModel:
    pair = [list(members(n)) for n in result.disjoint_nonfaces] if result.disjoint_nonfaces else None
    return PyramidTheoremModel(s_is_one=result.s_is_one, apex=result.apex, disjoint_nonfaces=pair)


def coloring_to_model(k: int, c: int, result: ColoringSearchResult) -> ColoringModel:
    colors = list(result.coloring.colors) if result.coloring else None
    return ColoringModel(k=k, colors_allowed=c, found=result.coloring is not None, nodes=result.nodes, colors=colors)


def fano_to_model(report: FanoReport) -> FanoModel:
    return FanoModel(colorings=report.colorings, with_single_colored_line=report.with_single_colored_line, holds=report.holds)


def fano_circle_to_model(report: FanoCircleReport) -> FanoCircleModel:
    first = [list(d) for d in report.first_counterexample] if report.first_counterexample else None
    return FanoCircleModel(
        trials=report.trials, seed=report.seed, counterexamples=report.counterexamples, first_counterexample=first
    )
