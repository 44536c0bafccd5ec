"""
分析与报告模块
"""

from .table1 import TableRow, build_table1, load_actual_volumes, render_table1

__all__ = ['TableRow', 'build_table1', 'load_actual_volumes', 'render_table1']
