import os
import json
import shutil
import logging
import threading
from datetime import datetime
from typing import Dict, List, Optional

logger = logging.getLogger("z2r")

CACHE_VERSION = 1


class SearchCache:
    """
    Finished searches on disk, one record per SearchSpec.cache_key().

    File layout:

        {"version": 1,
         "records": {"<key>": {"results": [json lines], "count": 3, "stored_at": "..."}}}

    A file with the wrong version, a broken record or invalid JSON is
    treated as empty; the previous contents survive in `<file>.bak` once
    the next record is stored.
    """

    def __init__(self, path: str):
        self.path = path
        self.lock = threading.Lock()

    @staticmethod
    def _empty() -> Dict:
        return {"version": CACHE_VERSION, "records": {}}

    def _read(self) -> Dict:
        if not os.path.exists(self.path):
            return self._empty()
        try:
            with open(self.path, "r") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            logger.error(f"Search cache {self.path} is not valid JSON: {e}. Starting a fresh cache.")
            return self._empty()

        if not isinstance(data, dict) or data.get("version") != CACHE_VERSION:
            logger.warning(f"Search cache {self.path} has an unknown layout, ignoring it")
            return self._empty()
        if not isinstance(data.get("records"), dict):
            logger.error(f"Search cache {self.path} has no records table. Starting a fresh cache.")
            return self._empty()
        return data

    def _write(self, data: Dict):
        if os.path.exists(self.path):
            shutil.copy(self.path, f"{self.path}.bak")
        tmp = f"{self.path}.tmp"
        with open(tmp, "w") as f:
            json.dump(data, f, indent=4)
        os.replace(tmp, self.path)

    def get(self, key: str) -> Optional[List[str]]:
        """Stored JSON lines for key, or None on a miss or a damaged record."""
        record = self._read()["records"].get(key)
        if record is None:
            return None
        results = record.get("results")
        if not isinstance(results, list) or record.get("count") != len(results):
            logger.warning(f"Dropping damaged cache record {key}")
            return None
        return results

    def put(self, key: str, lines: List[str]):
        with self.lock:
            data = self._read()
            data["records"][key] = {
                "results": list(lines),
                "count": len(lines),
                "stored_at": datetime.now().isoformat(timespec="seconds"),
            }
            self._write(data)
        logger.info(f"Cached {len(lines)} results under {key}")
