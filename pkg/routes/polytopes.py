import logging

from fastapi import APIRouter

from models.model import (
    ComplexModel,
    ConfigurationModel,
    FaceLatticeModel,
    FaceModel,
    FacetsModel,
    FNLEntryModel,
    FNLModel,
    NeighborlyModel,
    NeighborlyRequest,
    PolytopeModel,
    PyramidModel,
    VerificationModel,
)
from routes.errors import domain_errors
from utils.complex_core import members
from utils.gale import gale_diagram, verify_gale_alexander
from utils.polytope import f_nl, face_lattice, is_k_neighborly, is_pyramid, nerve_KP, nerve_KQ
from utils.serialization import complex_to_model, configuration_to_model, to_polytope

logger = logging.getLogger(__name__)

polytopes_router = APIRouter()


@polytopes_router.post("/polytopes/facets", response_model=FacetsModel)
def facets(request: PolytopeModel):
    with domain_errors():
        p = to_polytope(request)
        return FacetsModel(dimension=p.dimension, facets=[list(members(f)) for f in p.facets])


@polytopes_router.post("/polytopes/face-lattice", response_model=FaceLatticeModel)
def lattice(request: PolytopeModel):
    with domain_errors():
        faces = face_lattice(to_polytope(request))
        return FaceLatticeModel(faces=[FaceModel(vertices=list(members(f)), dim=dim) for f, dim in faces])


@polytopes_router.post("/polytopes/nerve", response_model=ComplexModel, response_model_exclude_none=True)
def nerve(request: PolytopeModel):
    """K(P): vertex sets lying on a common facet."""
    with domain_errors():
        return complex_to_model(nerve_KP(to_polytope(request)))


@polytopes_router.post("/polytopes/facet-nerve", response_model=ComplexModel, response_model_exclude_none=True)
def facet_nerve(request: PolytopeModel):
    """K_P on the facets: sets of facets sharing a vertex."""
    with domain_errors():
        return complex_to_model(nerve_KQ(to_polytope(request)))


@polytopes_router.post("/polytopes/f-nl", response_model=FNLModel)
def fnl(request: PolytopeModel):
    with domain_errors():
        counts = f_nl(to_polytope(request))
        return FNLModel(entries=[FNLEntryModel(n=n, l=l, count=c) for (n, l), c in counts.items()])


@polytopes_router.post("/polytopes/pyramid", response_model=PyramidModel, response_model_exclude_none=True)
def pyramid(request: PolytopeModel):
    with domain_errors():
        return PyramidModel(apex=is_pyramid(to_polytope(request)))


@polytopes_router.post("/polytopes/neighborly", response_model=NeighborlyModel)
def neighborly(request: NeighborlyRequest):
    with domain_errors():
        return NeighborlyModel(k=request.k, neighborly=is_k_neighborly(to_polytope(request.polytope), request.k))


@polytopes_router.post("/polytopes/gale", response_model=ConfigurationModel)
def gale(request: PolytopeModel):
    with domain_errors():
        x = gale_diagram(to_polytope(request))
        logger.info(f"gale diagram: {x.m} points in R^{x.dim}")
        return configuration_to_model(x)


@polytopes_router.post("/polytopes/gale-alexander", response_model=VerificationModel)
def gale_alexander(request: PolytopeModel):
    """Whether the constellation complex of the Gale diagram is the dual of K(P)."""
    with domain_errors():
        return VerificationModel(holds=verify_gale_alexander(to_polytope(request)))
