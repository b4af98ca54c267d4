"""
File cache for census shard results.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Optional

logger = logging.getLogger(__name__)


class CheckpointCache:
    """One JSON file per finished shard, keyed by everything that determines its result."""

    def __init__(self, cache_dir: str):
        """
        Initialize cache.

        Args:
            cache_dir: Directory for checkpoint files (created if missing)
        """
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def shard_key(**fields) -> str:
        """Stable key from (n, k, filter, shard range, code version, ...)."""
        key_data = json.dumps(fields, sort_keys=True)
        return hashlib.md5(key_data.encode()).hexdigest()

    def _get_cache_path(self, cache_key: str) -> Path:
        return self.cache_dir / f"{cache_key}.json"

    def get(self, cache_key: str) -> Optional[Any]:
        """Stored value, or None if the shard has not been finished."""
        cache_path = self._get_cache_path(cache_key)
        if not cache_path.exists():
            return None
        with open(cache_path, 'r') as f:
            logger.info("checkpoint hit %s", cache_key)
            return json.load(f)

    def set(self, cache_key: str, value: Any) -> None:
        """Write a shard result atomically."""
        cache_path = self._get_cache_path(cache_key)
        partial = cache_path.with_suffix('.tmp')
        with open(partial, 'w') as f:
            json.dump(value, f, indent=2, sort_keys=True)
        partial.replace(cache_path)

    def clear(self) -> int:
        """Clear all checkpoint files. Returns number of files deleted."""
        count = 0
        for cache_file in self.cache_dir.glob("*.json"):
            cache_file.unlink()
            count += 1
        return count
