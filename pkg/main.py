import logging

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import ORJSONResponse

from config.config import ALLOWED_URL, LOG_LEVEL
from routes.betti import betti_router
from routes.buchstaber import buchstaber_router
from routes.complexes import complexes_router
from routes.configurations import configurations_router
from routes.polytopes import polytopes_router
from routes.verify import verify_router
from utils.errors import GaleDualError

logging.basicConfig(level=LOG_LEVEL)
logger = logging.getLogger(__name__)

app = FastAPI(title="galedual")

origins = [
    ALLOWED_URL,
    "http://127.0.0.1:3000",
    "http://localhost:3000",
]

app.add_middleware(
    CORSMiddleware,
    allow_origins=origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(GaleDualError)
async def gale_dual_error(request: Request, exc: GaleDualError):
    logger.error(f"{request.url.path}: {type(exc).__name__}: {exc}")
    return ORJSONResponse(status_code=500, content={"detail": str(exc)})


app.include_router(complexes_router)
app.include_router(polytopes_router)
app.include_router(configurations_router)
app.include_router(betti_router)
app.include_router(buchstaber_router)
app.include_router(verify_router)
