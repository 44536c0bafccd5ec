"""
Ehrhart 伪多项式与体积模块
"""

from .polynomial import (
    EhrhartPolynomial,
    degree,
    ehrhart_value,
    interpolate_ehrhart,
    interpolate_values,
    period,
    relative_volume,
    transpose_relative_volume,
    verify_polynomial,
)
from .volume import ScaledVolume, absolute_volume

__all__ = [
    'EhrhartPolynomial',
    'ScaledVolume',
    'absolute_volume',
    'degree',
    'ehrhart_value',
    'interpolate_ehrhart',
    'interpolate_values',
    'period',
    'relative_volume',
    'transpose_relative_volume',
    'verify_polynomial',
]
