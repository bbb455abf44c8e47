import os
from dotenv import load_dotenv

load_dotenv()

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

# Homology field used when a request does not name one: "gf2" or "q"
DEFAULT_FIELD = os.getenv("DEFAULT_FIELD", "gf2")
THREADS = int(os.getenv("THREADS", "1"))

# Hochster sweep
HOCHSTER_MAX_VERTICES = int(os.getenv("HOCHSTER_MAX_VERTICES", "20"))
SUBCOMPLEX_CACHE_SIZE = int(os.getenv("SUBCOMPLEX_CACHE_SIZE", "4096"))

# Buchstaber searches
BUCHSTABER_MAX_VERTICES = int(os.getenv("BUCHSTABER_MAX_VERTICES", "14"))
BUCHSTABER_NODE_BUDGET = int(os.getenv("BUCHSTABER_NODE_BUDGET", "5000000"))
XI_MAX_RANK = int(os.getenv("XI_MAX_RANK", "4"))
COLORING_MAX_RANK = int(os.getenv("COLORING_MAX_RANK", "4"))
DEPENDENCE_MAX_RANK = int(os.getenv("DEPENDENCE_MAX_RANK", "6"))

# Fano-circle experiment
FANO_CIRCLE_TRIALS = int(os.getenv("FANO_CIRCLE_TRIALS", "100000"))
FANO_CIRCLE_SEED = int(os.getenv("FANO_CIRCLE_SEED", "2024"))
FANO_CIRCLE_BOUND = int(os.getenv("FANO_CIRCLE_BOUND", "100"))

# verify suites
VERIFY_SEED = int(os.getenv("VERIFY_SEED", "7"))
VERIFY_SAMPLES = int(os.getenv("VERIFY_SAMPLES", "300"))
CORPUS_DIR = os.getenv(
    "CORPUS_DIR", os.path.join(os.path.dirname(os.path.dirname(__file__)), "corpus")
)

ALLOWED_URL = os.getenv("ALLOWED_URL", "http://localhost:3000")
