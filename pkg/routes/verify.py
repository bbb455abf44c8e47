import logging

from fastapi import APIRouter

from config.config import DEFAULT_FIELD
from models.model import SuiteReportModel
from routes.errors import domain_errors
from utils.serialization import field_of
from utils.verify import SUITES, verify_all, verify_suite

logger = logging.getLogger(__name__)

verify_router = APIRouter()


@verify_router.get("/verify")
def suites() -> list[str]:
    return list(SUITES)


@verify_router.get("/verify/{name}", response_model=list[SuiteReportModel])
def run_suite(name: str, field: str | None = None):
    """Run one suite, or every suite for `all`, on the bundled corpus."""
    with domain_errors():
        field_ = field_of(field, DEFAULT_FIELD)
        if name == "all":
            return verify_all(field=field_)
        return [verify_suite(name, field=field_)]
