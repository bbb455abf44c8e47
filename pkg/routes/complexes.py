import logging

from fastapi import APIRouter

from config.config import DEFAULT_FIELD
from models.model import (
    ComplexModel,
    FaceRequest,
    FlagModel,
    FVectorModel,
    HomologyModel,
    HomologyRequest,
    JoinRequest,
    SkeletonRequest,
    WedgeRequest,
)
from routes.errors import domain_errors
from utils.complex_core import alexander_dual, f_vector, full_subcomplex, is_flag, join, link, skeleton, wedge_multiply
from utils.homology import reduced_betti
from utils.serialization import complex_to_model, field_of, to_complex

logger = logging.getLogger(__name__)

complexes_router = APIRouter()


@complexes_router.post("/complexes/dual", response_model=ComplexModel, response_model_exclude_none=True)
def dual(request: ComplexModel):
    """Alexander dual K^ on the same vertex set."""
    with domain_errors():
        return complex_to_model(alexander_dual(to_complex(request)))


@complexes_router.post("/complexes/nonfaces", response_model=ComplexModel, response_model_exclude_none=True)
def nonfaces(request: ComplexModel):
    with domain_errors():
        return complex_to_model(to_complex(request), nonfaces=True)


@complexes_router.post("/complexes/link", response_model=ComplexModel, response_model_exclude_none=True)
def link_of_face(request: FaceRequest):
    """Link of a face, on the vertices outside it."""
    with domain_errors():
        return complex_to_model(link(to_complex(request.complex), request.face))


@complexes_router.post("/complexes/subcomplex", response_model=ComplexModel, response_model_exclude_none=True)
def subcomplex(request: FaceRequest):
    with domain_errors():
        return complex_to_model(full_subcomplex(to_complex(request.complex), request.face))


@complexes_router.post("/complexes/skeleton", response_model=ComplexModel, response_model_exclude_none=True)
def skeleton_of(request: SkeletonRequest):
    with domain_errors():
        return complex_to_model(skeleton(to_complex(request.complex), request.dim))


@complexes_router.post("/complexes/join", response_model=ComplexModel, response_model_exclude_none=True)
def join_of(request: JoinRequest):
    with domain_errors():
        return complex_to_model(join(to_complex(request.first), to_complex(request.second)))


@complexes_router.post("/complexes/wedge", response_model=ComplexModel, response_model_exclude_none=True)
def wedge(request: WedgeRequest):
    with domain_errors():
        return complex_to_model(wedge_multiply(to_complex(request.complex), request.multiplicities))


@complexes_router.post("/complexes/flag", response_model=FlagModel)
def flag(request: ComplexModel):
    with domain_errors():
        return FlagModel(flag=is_flag(to_complex(request)))


@complexes_router.post("/complexes/f-vector", response_model=FVectorModel)
def f_vector_of(request: ComplexModel):
    with domain_errors():
        return FVectorModel(f_vector=f_vector(to_complex(request)))


@complexes_router.post("/complexes/homology", response_model=HomologyModel)
def homology(request: HomologyRequest):
    """Reduced Betti numbers, keyed by degree, zeros left out."""
    with domain_errors():
        field = field_of(request.field, DEFAULT_FIELD)
        betti = reduced_betti(to_complex(request.complex), field)
        logger.info(f"homology over {field.value}: {betti.nonzero()}")
        return HomologyModel(field=field.value, betti=betti.nonzero())
