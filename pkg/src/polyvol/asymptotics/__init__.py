"""
渐近估计模块
"""

from .estimates import (
    estimate_birkhoff_volume_log,
    estimate_count_log,
    estimate_rel_volume_proxy_log,
    estimate_volume_log,
    log_binomial,
    volume_condition,
)
from .hypothesis import HypReport, hyp_margin
from .logreal import LogReal

__all__ = [
    'HypReport',
    'LogReal',
    'estimate_birkhoff_volume_log',
    'estimate_count_log',
    'estimate_rel_volume_proxy_log',
    'estimate_volume_log',
    'hyp_margin',
    'log_binomial',
    'volume_condition',
]
