"""
全局配置参数
"""

import os

from dotenv import load_dotenv

# 允许通过 .env 覆盖部分运行参数
load_dotenv()

# ============ 精确计数 ============
# 计数缓存文件（每行 m,s,n,t,count）
COUNT_CACHE_FILE = os.getenv("POLYVOL_CACHE", "data/cache/counts.csv")

# 单次精确计数的墙钟预算（秒）
COUNT_TIME_BUDGET = float(os.getenv("POLYVOL_TIME_BUDGET", "600"))

# 每处理多少个状态检查一次截止时间
DEADLINE_CHECK_INTERVAL = 2048

# 暴力枚举（测试基准）允许的最大候选矩阵数
ORACLE_ENUMERATION_BUDGET = 2_000_000

# 并行计数的进程数（1 表示串行）
WORKER_THREADS = int(os.getenv("POLYVOL_THREADS", "1"))

# ============ 渐近估计 ============
# 计数估计适用条件中的常数 a, b，要求 a + b < 1/2
HYP_DEFAULT_A = 0.3
HYP_DEFAULT_B = 0.1

# ============ 输出配置 ============
# 实数输出的有效数字位数
OUTPUT_DIGITS = 6

# 输出格式：text / csv / json
DEFAULT_FORMAT = "text"

# ============ 精度对照表 ============
TABLE1_MAX_N = 5
TABLE1_MAX_EXACT_N = 5            # 超过此 n 只输出估计值
TABLE1_PLOT_FILE = "data/reports/table1_ratio.png"

# ============ 日志配置 ============
LOG_DIR = "logs"
LOG_FILE = "polyvol.log"
LOG_TO_FILE = False               # 命令行默认只输出到 stderr
DEFAULT_LOG_LEVEL = "WARNING"
