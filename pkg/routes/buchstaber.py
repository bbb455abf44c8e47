import logging

from fastapi import APIRouter

from models.model import (
    ColoringModel,
    ColoringRequest,
    ComplexModel,
    EtaRequest,
    FanoCircleModel,
    FanoCircleRequest,
    FanoModel,
    PolytopeModel,
    PyramidTheoremModel,
    RealInvariantModel,
    RealInvariantRequest,
    SBoundsModel,
    VerificationModel,
    XiModel,
    XiRequest,
)
from routes.errors import domain_errors
from utils.buchstaber import eta_certificate_check, s_bounds, s_equals_one, s_real_exact, s_real_lower_via_xi
from utils.combinatorics_z2 import fano_circle_experiment, fano_two_coloring_check, proper_coloring_search
from utils.serialization import (
    bounds_to_model,
    coloring_to_model,
    fano_circle_to_model,
    fano_to_model,
    pyramid_theorem_to_model,
    real_invariant_to_model,
    to_complex,
    to_configuration,
    to_polytope,
    xi_to_model,
)

logger = logging.getLogger(__name__)

buchstaber_router = APIRouter()


@buchstaber_router.post("/buchstaber/real", response_model=RealInvariantModel, response_model_exclude_none=True)
def real_invariant(request: RealInvariantRequest):
    """Real Buchstaber invariant with a witness matrix, or the rank where the search gave up."""
    with domain_errors():
        return real_invariant_to_model(s_real_exact(to_complex(request.complex), request.r_max))


@buchstaber_router.post("/buchstaber/xi", response_model=XiModel, response_model_exclude_none=True)
def xi(request: XiRequest):
    with domain_errors():
        return xi_to_model(request.k, s_real_lower_via_xi(to_complex(request.complex), request.k))


@buchstaber_router.post("/buchstaber/bounds", response_model=SBoundsModel, response_model_exclude_none=True)
def bounds(request: ComplexModel):
    with domain_errors():
        return bounds_to_model(s_bounds(to_complex(request)))


@buchstaber_router.post(
    "/buchstaber/pyramid-theorem", response_model=PyramidTheoremModel, response_model_exclude_none=True
)
def pyramid_theorem(request: PolytopeModel):
    with domain_errors():
        return pyramid_theorem_to_model(s_equals_one(to_polytope(request)))


@buchstaber_router.post("/buchstaber/eta", response_model=VerificationModel)
def eta(request: EtaRequest):
    with domain_errors():
        return VerificationModel(holds=eta_certificate_check(to_configuration(request.configuration), request.k, request.eta))


@buchstaber_router.post("/buchstaber/coloring", response_model=ColoringModel, response_model_exclude_none=True)
def coloring(request: ColoringRequest):
    with domain_errors():
        return coloring_to_model(request.k, request.colors, proper_coloring_search(request.k, request.colors))


@buchstaber_router.get("/buchstaber/fano", response_model=FanoModel)
def fano():
    return fano_to_model(fano_two_coloring_check())


@buchstaber_router.post("/buchstaber/fano-circle", response_model=FanoCircleModel, response_model_exclude_none=True)
def fano_circle(request: FanoCircleRequest):
    with domain_errors():
        return fano_circle_to_model(fano_circle_experiment(request.trials, request.seed))
