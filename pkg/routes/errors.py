import logging
from contextlib import contextmanager

from fastapi import HTTPException

from utils.errors import CapExceededError, DualUndefinedError, InputError, NotAFaceError

logger = logging.getLogger(__name__)


@contextmanager
def domain_errors():
    """Turn the library's caller errors into HTTP responses."""
    try:
        yield
    except InputError as e:
        logger.info(f"rejected input: {e}")
        raise HTTPException(status_code=422, detail=str(e))
    except (DualUndefinedError, NotAFaceError, CapExceededError) as e:
        logger.info(f"rejected request: {e}")
        raise HTTPException(status_code=400, detail=str(e))
