"""
Persistent result cache for the Fujiki orbifold toolkit.

Singularity censuses of the larger groups take seconds to minutes; their
results are small JSON objects. This cache keeps them in a JSON file keyed
by a digest of (generators, involution map), with a TTL, and is safe to
share between worker threads.
"""

import json
import time
import threading
import logging
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


class PersistentCacheManager:
    """
    Thread-safe JSON-file cache with per-read TTL.

    Entries are stored as ``key -> [timestamp, value]``; values must be
    JSON-serializable.
    """

    def __init__(self, cache_file: str, cache_dir: str = ".cache"):
        """
        Args:
            cache_file: File name inside ``cache_dir`` (e.g. 'profiles.json')
            cache_dir: Directory holding cache files, created if missing
        """
        self.cache_dir = Path(cache_dir)
        self.cache_file = self.cache_dir / cache_file
        self.lock = threading.RLock()
        self._cache: Dict[str, tuple] = {}
        self._dirty = False

        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self._load_from_disk()
        logger.info(f"PersistentCacheManager initialized: {self.cache_file}")

    def _load_from_disk(self):
        if not self.cache_file.exists():
            self._save_to_disk()
            logger.info(f"Created new cache file at {self.cache_file}")
            return
        try:
            with open(self.cache_file, 'r') as f:
                data = json.load(f)
            for key, value in data.items():
                # [timestamp, value]; anything else is a stale format
                if isinstance(value, list) and len(value) == 2:
                    self._cache[key] = tuple(value)
            logger.info(f"Loaded {len(self._cache)} entries from {self.cache_file}")
        except (OSError, ValueError) as e:
            logger.error(f"Error loading cache from disk: {e}")
            self._cache = {}

    def _save_to_disk(self):
        try:
            with open(self.cache_file, 'w') as f:
                json.dump({key: list(value) for key, value in self._cache.items()}, f, indent=2, sort_keys=True)
            self._dirty = False
            logger.debug(f"Saved {len(self._cache)} entries to {self.cache_file}")
        except (OSError, TypeError) as e:
            logger.error(f"Error saving cache to disk: {e}")

    def get(self, key: str, ttl: Optional[int] = None) -> Optional[Any]:
        """
        Cached value for ``key``, or None when absent or older than ``ttl`` seconds.
        """
        with self.lock:
            if key not in self._cache:
                return None
            stored_at, value = self._cache[key]
            if ttl is not None and (time.time() - stored_at) >= ttl:
                del self._cache[key]
                self._dirty = True
                return None
            return value

    def set(self, key: str, value: Any):
        """Store ``value`` and write the file immediately."""
        with self.lock:
            self._cache[key] = (time.time(), value)
            self._save_to_disk()

    def clear(self):
        with self.lock:
            self._cache.clear()
            self._save_to_disk()
            logger.info(f"Cleared cache: {self.cache_file}")

    def cleanup_expired(self, ttl: int):
        """Drop every entry older than ``ttl`` seconds."""
        with self.lock:
            now = time.time()
            expired = [key for key, (stored_at, _) in self._cache.items() if (now - stored_at) >= ttl]
            for key in expired:
                del self._cache[key]
            if expired:
                self._save_to_disk()
                logger.info(f"Cleaned up {len(expired)} expired entries from {self.cache_file}")

    def get_stats(self) -> dict:
        with self.lock:
            return {
                'total_entries': len(self._cache),
                'cache_file': str(self.cache_file),
                'file_exists': self.cache_file.exists()
            }

    def __del__(self):
        if getattr(self, "_dirty", False):
            self._save_to_disk()
