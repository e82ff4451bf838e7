"""
配置文件 - 单项式理想LCM对偶计算与验证系统
"""
import os
from dotenv import load_dotenv

# 加载环境变量
load_dotenv()


def _env_bool(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


class Config:
    """系统配置类"""

    # 规模保护（多重分次Betti数验证器）
    MAX_SCALE = int(os.getenv('MONOMIDEAL_MAX_SCALE', '24'))            # 生成元个数上限
    MAX_LATTICE_SIZE = int(os.getenv('MONOMIDEAL_MAX_LATTICE', '4096'))  # lcm格大小上限

    # 高度计算采用穷举子集搜索
    HEIGHT_MAX_VARIABLES = int(os.getenv('MONOMIDEAL_HEIGHT_MAX_VARS', '16'))

    # 特殊纤维环验证的默认次数上界
    DEFAULT_RMAX = int(os.getenv('MONOMIDEAL_DEFAULT_RMAX', '3'))

    # 随机自检配置
    SELFTEST_SAMPLES = int(os.getenv('MONOMIDEAL_SELFTEST_SAMPLES', '500'))
    SELFTEST_PRODUCT_SAMPLES = int(os.getenv('MONOMIDEAL_SELFTEST_PRODUCT_SAMPLES', '200'))
    DEFAULT_SEED = int(os.getenv('MONOMIDEAL_SEED', '20240101'))

    # 随机理想的取值范围（变量数、指数、生成元个数）
    RANDOM_MAX_VARIABLES = 5
    RANDOM_MAX_EXPONENT = 5
    RANDOM_MAX_GENERATORS = 8

    # 定理穷举范围
    DECOMPOSITION_MAX_ROWS = 4      # m <= 4
    DECOMPOSITION_MAX_COLUMNS = 5   # n <= 5
    RESOLUTION_MAX_ROWS = 4         # m <= 4
    RESOLUTION_MAX_FIRST_PART = 6   # lambda_1 <= 6
    FIBER_MAX_ROWS = 3              # m <= 3
    FIBER_MAX_FIRST_PART = 4        # lambda_1 <= 4

    # 日志配置
    LOG_DIR = os.getenv('MONOMIDEAL_LOG_DIR', 'logs')
    LOG_TO_FILE = _env_bool('MONOMIDEAL_LOG_TO_FILE')
    LOG_LEVEL = os.getenv('MONOMIDEAL_LOG_LEVEL', 'INFO')
    CONSOLE_LOG_LEVEL = os.getenv('MONOMIDEAL_CONSOLE_LOG_LEVEL', 'WARNING')

    @classmethod
    def validate(cls):
        """验证配置"""
        if cls.MAX_SCALE < 1:
            raise ValueError(f"MONOMIDEAL_MAX_SCALE 必须为正整数，当前为 {cls.MAX_SCALE}")
        if cls.MAX_LATTICE_SIZE < 1:
            raise ValueError(f"MONOMIDEAL_MAX_LATTICE 必须为正整数，当前为 {cls.MAX_LATTICE_SIZE}")
        if cls.DEFAULT_RMAX < 1:
            raise ValueError(f"MONOMIDEAL_DEFAULT_RMAX 必须 >= 1，当前为 {cls.DEFAULT_RMAX}")

        # 确保目录存在
        if cls.LOG_TO_FILE:
            os.makedirs(cls.LOG_DIR, exist_ok=True)

        return True
