"""
精确计数核心模块
"""

from .counter import bounded_compositions, count_constant_margins, count_margins_general
from .errors import (
    CacheContradictionError,
    CacheCorruptionError,
    CacheLockedError,
    CountBudgetError,
    InvalidMarginsError,
    OracleBudgetError,
    PolyvolError,
    UnbalancedMarginsError,
)
from .margins import BigCount, GeneralMargins, MarginSpec
from .oracle import brute_force_count

__all__ = [
    'BigCount',
    'GeneralMargins',
    'MarginSpec',
    'bounded_compositions',
    'brute_force_count',
    'count_constant_margins',
    'count_margins_general',
    'CacheContradictionError',
    'CacheCorruptionError',
    'CacheLockedError',
    'CountBudgetError',
    'InvalidMarginsError',
    'OracleBudgetError',
    'PolyvolError',
    'UnbalancedMarginsError',
]
