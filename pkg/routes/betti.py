import logging

from fastapi import APIRouter

from config.config import DEFAULT_FIELD
from models.model import (
    BettiRequest,
    BettiTableModel,
    GaleBettiModel,
    GaleBettiRequest,
    HomologyRequest,
    LinearResolutionModel,
    LinearResolutionRequest,
)
from routes.errors import domain_errors
from utils.betti import (
    betti_of_polytope_via_gale_links,
    betti_via_links,
    has_linear_resolution,
    hochster_betti,
    polytope_betti_from_gale,
)
from utils.serialization import betti_to_model, entries_to_model, field_of, to_complex, to_configuration, to_polytope

logger = logging.getLogger(__name__)

betti_router = APIRouter()


@betti_router.post("/betti/hochster", response_model=BettiTableModel)
def hochster(request: BettiRequest):
    """Bigraded Betti numbers of the face ring, degrees as (i, 2j)."""
    with domain_errors():
        field = field_of(request.field, DEFAULT_FIELD)
        return betti_to_model(hochster_betti(to_complex(request.complex), field, request.threads))


@betti_router.post("/betti/dual-via-links", response_model=BettiTableModel)
def dual_via_links(request: HomologyRequest):
    with domain_errors():
        field = field_of(request.field, DEFAULT_FIELD)
        return betti_to_model(betti_via_links(to_complex(request.complex), field))


@betti_router.post("/betti/linear-resolution", response_model=LinearResolutionModel)
def linear_resolution(request: LinearResolutionRequest):
    with domain_errors():
        table = hochster_betti(to_complex(request.complex), field_of(request.field, DEFAULT_FIELD))
        return LinearResolutionModel(r=request.r, linear=has_linear_resolution(table, request.r))


@betti_router.post("/betti/gale", response_model=GaleBettiModel, response_model_exclude_none=True)
def gale_table(request: GaleBettiRequest):
    """Table of the constellation complex; with a polytope, its residual against f_(n,l)."""
    with domain_errors():
        field = field_of(request.field, DEFAULT_FIELD)
        polytope = to_polytope(request.polytope) if request.polytope else None
        comparison = polytope_betti_from_gale(to_configuration(request.configuration), polytope, field)
        residual = entries_to_model(comparison.residual) if comparison.residual is not None else None
        return GaleBettiModel(table=betti_to_model(comparison.table), residual=residual)


@betti_router.post("/betti/polytope-via-gale", response_model=BettiTableModel)
def polytope_via_gale(request: GaleBettiRequest):
    with domain_errors():
        field = field_of(request.field, DEFAULT_FIELD)
        return betti_to_model(betti_of_polytope_via_gale_links(to_configuration(request.configuration), field))
