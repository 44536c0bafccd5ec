"""
全局配置包
"""
