#!/usr/bin/env python
"""
回归基准生成工具
对较大的实例做一次精确计数/插值，把结果写入 tests/data/regression_pins.json；
该文件随代码提交，测试直接与之比对。

用法:
    python tools/pin_regressions.py
    python tools/pin_regressions.py --threads 8 --cache data/cache/counts.csv
    python tools/pin_regressions.py --include-lambda2   # 8×8、λ=2，耗时很长
"""

import argparse
import json
import math
import os
import sys

# 添加项目根目录到路径（包含 src 和 config）
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, project_root)
sys.path.insert(0, os.path.join(project_root, 'src'))

from config.config import COUNT_CACHE_FILE, WORKER_THREADS  # noqa: E402

DEFAULT_OUTPUT = os.path.join(project_root, 'tests', 'data', 'regression_pins.json')
PROXY_MULTS = (16, 32, 64)


def main():
    parser = argparse.ArgumentParser(description="回归基准生成工具")
    parser.add_argument('--output', type=str, default=DEFAULT_OUTPUT, help='输出 JSON 路径')
    parser.add_argument('--cache', type=str, default=COUNT_CACHE_FILE, help='计数缓存文件')
    parser.add_argument('--threads', type=int, default=WORKER_THREADS, help='并行进程数')
    parser.add_argument('--include-lambda2', action='store_true', help='同时计算 8×8、λ=2 的计数')
    parser.add_argument('--include-b6', action='store_true', help='同时插值 B_6 的精确体积')
    args = parser.parse_args()

    from polyvol.analysis.table1 import build_table1
    from polyvol.asymptotics.estimates import estimate_count_log, estimate_rel_volume_proxy_log
    from polyvol.core.margins import MarginSpec
    from polyvol.core.service import CountService
    from polyvol.ehrhart.polynomial import interpolate_ehrhart, relative_volume
    from polyvol.store.count_cache import CountCache
    from polyvol.utils.logger import setup_logging

    setup_logging(level='INFO')

    print("📌 回归基准生成工具")
    print("=" * 60)

    pins = {"counts": [], "relative_volumes": [], "proxies": [], "table1": []}
    if os.path.exists(args.output):
        with open(args.output, 'r', encoding='utf-8') as f:
            pins.update(json.load(f))

    specs = [MarginSpec(8, 8, 8, 8)]
    if args.include_lambda2:
        specs.append(MarginSpec(8, 16, 8, 16))

    with CountCache(args.cache) as cache:
        service = CountService(cache=cache, time_budget=None, max_workers=args.threads)

        known = {(p['m'], p['s'], p['n'], p['t']) for p in pins['counts']}
        for spec in specs:
            if spec.key() in known:
                print(f"[跳过] {spec.key()} 已有基准")
                continue
            print(f"[计算] M{spec.key()} ...")
            value = service.count(spec)
            estimate_log = estimate_count_log(spec).log_value
            pins['counts'].append({
                "m": spec.m, "s": spec.s, "n": spec.n, "t": spec.t,
                "count": str(value),
                "estimate_log": estimate_log,
                "ratio": math.exp(estimate_log - math.log(value)),
            })
            print(f"[完成] {len(str(value))} 位")

        print("[计算] 对照表 n = 1..5 ...")
        rows = build_table1(5, 5, service)
        pins['table1'] = [
            {"n": row.n, "volume": str(row.exact_volume.as_fraction()), "ratio": row.ratio}
            for row in rows
        ]

        sizes = [4, 5] + ([6] if args.include_b6 else [])
        known_nu = {(p['m'], p['n']) for p in pins['relative_volumes']}
        for size in sizes:
            if (size, size) in known_nu:
                continue
            print(f"[计算] T_{{{size},{size}}} 插值 ...")
            nu = relative_volume(interpolate_ehrhart(size, size, service))
            pins['relative_volumes'].append({"m": size, "n": size, "nu": str(nu)})

    pins['proxies'] = [
        {"m": 3, "n": 3, "lambda_mult": k, "log": estimate_rel_volume_proxy_log(3, 3, k).log_value}
        for k in PROXY_MULTS
    ]

    os.makedirs(os.path.dirname(args.output), exist_ok=True)
    with open(args.output, 'w', encoding='utf-8') as f:
        json.dump(pins, f, ensure_ascii=False, indent=2)
    print(f"\n✅ 基准已写入: {args.output}")


if __name__ == '__main__':
    main()
