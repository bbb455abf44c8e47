from fastapi import APIRouter

from models.model import (
    ComplexModel,
    ConfigurationModel,
    ConfigurationPropertiesModel,
    DirectSumRequest,
    MultiplicityRequest,
)
from routes.errors import domain_errors
from utils.gale import constellation_complex, covers_sphere, direct_sum, is_good, is_nondegenerate, with_multiplicities
from utils.serialization import complex_to_model, configuration_to_model, to_configuration

configurations_router = APIRouter()


@configurations_router.post(
    "/configurations/constellation", response_model=ComplexModel, response_model_exclude_none=True
)
def constellation(request: ConfigurationModel):
    with domain_errors():
        return complex_to_model(constellation_complex(to_configuration(request)))


@configurations_router.post("/configurations/properties", response_model=ConfigurationPropertiesModel)
def properties(request: ConfigurationModel):
    with domain_errors():
        x = to_configuration(request)
        return ConfigurationPropertiesModel(
            covers_sphere=covers_sphere(x), good=is_good(x), nondegenerate=is_nondegenerate(x)
        )


@configurations_router.post("/configurations/multiplicities", response_model=ConfigurationModel)
def multiplicities(request: MultiplicityRequest):
    with domain_errors():
        x = with_multiplicities(to_configuration(request.configuration), request.multiplicities)
        return configuration_to_model(x)


@configurations_router.post("/configurations/direct-sum", response_model=ConfigurationModel)
def direct_sum_of(request: DirectSumRequest):
    with domain_errors():
        x = direct_sum(to_configuration(request.first), to_configuration(request.second))
        return configuration_to_model(x)
