"""
异常定义模块

所有库函数只抛出异常，不打印、不退出；命令行层根据 exit_code 统一映射退出码：
0 正常，1 验证失败，2 解析错误，3 领域错误。
"""

from typing import Any, Optional


class MonomialIdealError(Exception):
    """单项式理想计算异常基类"""

    exit_code = 3


class ParseError(MonomialIdealError):
    """输入文本或JSON无法解析"""

    exit_code = 2


class DomainError(MonomialIdealError):
    """输入合法但不满足运算的前提条件"""

    exit_code = 3


class ZeroIdealError(DomainError):
    """运算要求非零理想"""


class UnitIdealError(DomainError):
    """运算要求真理想（非单位理想）"""


class AmbientMismatchError(DomainError):
    """两个对象的变量个数不一致"""


class InvalidPartitionError(DomainError):
    """分拆不合法（非递减、含非正数或不满足强稳定条件）"""


class InvalidShiftError(DomainError):
    """平移向量 mu 不满足 0 <= mu_1 <= ... <= mu_m < lambda_m"""


class NonSquarefreeError(DomainError):
    """Alexander对偶要求无平方生成元"""


class HypothesisError(DomainError):
    """定理假设不成立（高度、等次生成、强稳定等）"""


class ScaleGuardError(DomainError):
    """超过配置的规模上限"""


class VerificationError(MonomialIdealError):
    """机器验证失败"""

    exit_code = 1

    def __init__(self, check: str, detail: Any = None, message: Optional[str] = None):
        self.check = check
        self.detail = detail
        super().__init__(message or f"验证失败 [{check}]: {detail}")
