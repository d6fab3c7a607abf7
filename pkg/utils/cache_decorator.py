"""Caching decorator for expensive pure computations."""

import functools
import time
import logging
from typing import Callable, Optional

from cache_manager import PersistentCacheManager

# Module logger
logger = logging.getLogger(__name__)

# Shared persistent cache, None while caching is disabled
_computation_cache: Optional[PersistentCacheManager] = None
_default_ttl: Optional[int] = None


def configure_cache(enabled: bool, cache_dir: str = ".cache", ttl: Optional[int] = None,
                    cache_file: str = 'computations.json') -> Optional[PersistentCacheManager]:
    """
    Turn the shared cache on or off.

    Returns:
        The active cache manager, or None when disabled
    """
    global _computation_cache, _default_ttl
    _computation_cache = PersistentCacheManager(cache_file, cache_dir) if enabled else None
    _default_ttl = ttl
    return _computation_cache


def get_cache() -> Optional[PersistentCacheManager]:
    return _computation_cache


def cache_computation(ttl: Optional[int] = None, key_func: Optional[Callable[..., str]] = None):
    """
    Decorator caching JSON-serializable results in the shared cache.

    Args:
        ttl: Time to live in seconds (default: the configured TTL)
        key_func: Builds the cache key from the call arguments; defaults to
            the function name with the printed arguments

    Returns:
        Decorated function; a plain call while caching is disabled
    """
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            cache = _computation_cache
            if cache is None:
                return func(*args, **kwargs)

            if key_func is not None:
                cache_key = f"{func.__name__}:{key_func(*args, **kwargs)}"
            else:
                sorted_kwargs = dict(sorted(kwargs.items()))
                cache_key = f"{func.__name__}:{str(args)}:{str(sorted_kwargs)}"

            cached_result = cache.get(cache_key, ttl=ttl if ttl is not None else _default_ttl)
            if cached_result is not None:
                logger.debug(f"cache_computation: HIT {cache_key}")
                return cached_result
            logger.debug(f"cache_computation: MISS {cache_key}")

            start = time.time()
            result = func(*args, **kwargs)
            logger.debug(f"cache_computation: CALL {func.__name__} took {time.time() - start:.3f}s")
            cache.set(cache_key, result)
            return result
        return wrapper
    return decorator
