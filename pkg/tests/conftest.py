import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))
SRC = ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.append(str(SRC))


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="运行耗时较长的验收测试（精确体积插值、8×8 计数等）")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: 耗时较长，需加 --runslow 才运行")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="需要 --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
