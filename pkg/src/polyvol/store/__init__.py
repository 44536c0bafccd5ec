"""
计数缓存
"""

from .count_cache import CACHE_HEADER, CacheEntry, CountCache

__all__ = ["CACHE_HEADER", "CacheEntry", "CountCache"]
