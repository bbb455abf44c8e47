from typing import Literal

from pydantic import BaseModel, model_validator

# Rationals travel as "p/q" or "p" strings; plain integers are accepted on input.
Coordinate = str | int


class ComplexModel(BaseModel):
    m: int
    maximal_faces: list[list[int]] | None = None
    minimal_nonfaces: list[list[int]] | None = None

    @model_validator(mode="after")
    def exactly_one_generator(self):
        if (self.maximal_faces is None) == (self.minimal_nonfaces is None):
            raise ValueError("give exactly one of maximal_faces and minimal_nonfaces")
        return self


class PolytopeModel(BaseModel):
    vertices: list[list[Coordinate]]


class ConfigurationModel(BaseModel):
    dim: int
    points: list[list[Coordinate]]


class FaceRequest(BaseModel):
    complex: ComplexModel
    face: list[int]


class SkeletonRequest(BaseModel):
    complex: ComplexModel
    dim: int


class JoinRequest(BaseModel):
    first: ComplexModel
    second: ComplexModel


class WedgeRequest(BaseModel):
    complex: ComplexModel
    multiplicities: list[int]


class HomologyRequest(BaseModel):
    complex: ComplexModel
    field: Literal["gf2", "q"] | None = None


class NeighborlyRequest(BaseModel):
    polytope: PolytopeModel
    k: int


class MultiplicityRequest(BaseModel):
    configuration: ConfigurationModel
    multiplicities: list[int]


class DirectSumRequest(BaseModel):
    first: ConfigurationModel
    second: ConfigurationModel


class BettiRequest(BaseModel):
    complex: ComplexModel
    field: Literal["gf2", "q"] | None = None
    threads: int | None = None


class LinearResolutionRequest(BaseModel):
    complex: ComplexModel
    r: int
    field: Literal["gf2", "q"] | None = None


class GaleBettiRequest(BaseModel):
    configuration: ConfigurationModel
    polytope: PolytopeModel | None = None
    field: Literal["gf2", "q"] | None = None


class RealInvariantRequest(BaseModel):
    complex: ComplexModel
    r_max: int | None = None


class XiRequest(BaseModel):
    complex: ComplexModel
    k: int


class EtaRequest(BaseModel):
    configuration: ConfigurationModel
    k: int
    eta: list[list[Coordinate]]


class ColoringRequest(BaseModel):
    k: int
    colors: int


class FanoCircleRequest(BaseModel):
    trials: int | None = None
    seed: int | None = None


class HomologyModel(BaseModel):
    field: str
    betti: dict[int, int]


class FVectorModel(BaseModel):
    f_vector: list[int]


class FlagModel(BaseModel):
    flag: bool


class FacetsModel(BaseModel):
    dimension: int
    facets: list[list[int]]


class FaceModel(BaseModel):
    vertices: list[int]
    dim: int


class FaceLatticeModel(BaseModel):
    faces: list[FaceModel]


class FNLEntryModel(BaseModel):
    n: int
    l: int
    count: int


class FNLModel(BaseModel):
    entries: list[FNLEntryModel]


class PyramidModel(BaseModel):
    apex: int | None = None


class NeighborlyModel(BaseModel):
    k: int
    neighborly: bool


class VerificationModel(BaseModel):
    holds: bool


class ConfigurationPropertiesModel(BaseModel):
    covers_sphere: bool
    good: bool
    nondegenerate: bool


class BettiEntryModel(BaseModel):
    i: int
    deg: int
    value: int


class BettiTableModel(BaseModel):
    field: str
    m: int
    entries: list[BettiEntryModel]


class GaleBettiModel(BaseModel):
    table: BettiTableModel
    residual: list[BettiEntryModel] | None = None


class LinearResolutionModel(BaseModel):
    r: int
    linear: bool


class WitnessModel(BaseModel):
    m: int
    r: int
    rows: list[str]


class RealInvariantModel(BaseModel):
    value: int
    exact: bool
    nodes: int
    refuted_rank: int | None = None
    unknown_above: int | None = None
    witness: WitnessModel | None = None


class XiEntryModel(BaseModel):
    a: str
    nonface: list[int]


class XiModel(BaseModel):
    k: int
    found: bool
    complete: bool
    nodes: int
    assignment: list[XiEntryModel] | None = None


class BoundModel(BaseModel):
    value: int
    tag: str


class SBoundsModel(BaseModel):
    s_lower: BoundModel
    s_upper: BoundModel
    s_real_lower: BoundModel
    s_real_upper: BoundModel
    s_exact: int | None = None
    s_real_exact: int | None = None


class PyramidTheoremModel(BaseModel):
    s_is_one: bool
    apex: int | None = None
    disjoint_nonfaces: list[list[int]] | None = None


class ColoringModel(BaseModel):
    k: int
    colors_allowed: int
    found: bool
    nodes: int
    colors: list[int] | None = None


class FanoModel(BaseModel):
    colorings: int
    with_single_colored_line: int
    holds: bool


class FanoCircleModel(BaseModel):
    trials: int
    seed: int
    counterexamples: int
    first_counterexample: list[list[int]] | None = None


class Expectation(BaseModel):
    value: bool | int | list | dict | None
    provenance: Literal["PAPER", "TRIVIAL", "DERIVED"]


class CorpusEntry(BaseModel):
    name: str
    polytope: str | None = None
    configuration: str | None = None
    complex: str | None = None
    expected: dict[str, Expectation] = {}


class Manifest(BaseModel):
    entries: list[CorpusEntry]


class SuiteReportModel(BaseModel):
    name: str
    passed: bool
    checks: int
    skipped: int = 0
    failures: list[str] = []
