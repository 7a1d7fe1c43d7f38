import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Enumeration
SPAN_LIMIT = int(os.getenv("Z2R_SPAN_LIMIT", str(2 ** 24)))

# Search workers
SEARCH_THREADS = int(os.getenv("Z2R_SEARCH_THREADS", "4"))
SEARCH_CHUNK = int(os.getenv("Z2R_SEARCH_CHUNK", "64"))
SEARCH_CACHE = os.getenv("Z2R_SEARCH_CACHE", "")

# Logging
LOG_DIR = os.getenv("Z2R_LOG_DIR", "logs")
LOG_LEVEL = os.getenv("Z2R_LOG_LEVEL", "WARNING").upper()

if SPAN_LIMIT < 1:
    raise ValueError("Z2R_SPAN_LIMIT must be positive")
if SEARCH_THREADS < 1 or SEARCH_CHUNK < 1:
    raise ValueError("Z2R_SEARCH_THREADS and Z2R_SEARCH_CHUNK must be positive")
