"""pytest配置：把项目根目录加入导入路径，并提供常用对象"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.analysis.ferrers import Partition  # noqa: E402
from src.core.io_formats import parse_ideal  # noqa: E402
from src.utils.logger_config import setup_logging  # noqa: E402

# 控制台处理器在会话开始时绑定stderr，CliRunner替换的流不会被日志持有
setup_logging()


@pytest.fixture
def lam443():
    return Partition((4, 4, 3))


@pytest.fixture
def ideal_of():
    """文本 -> MonomialIdeal"""

    def build(text, n=None):
        ideal, _ = parse_ideal(text, n=n)
        return ideal

    return build
