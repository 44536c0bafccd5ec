"""
运输多面体体积工具包
精确格点计数 + Ehrhart 插值，以及渐近体积估计
"""

__version__ = "0.1.0"
