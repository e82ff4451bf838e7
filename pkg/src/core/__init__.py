"""
核心模块

包含基础代数对象：
- 有理数精确线性代数
- 单项式与单项式理想、LCM对偶
- 文本/JSON输入输出格式
"""

from .errors import MonomialIdealError, ParseError, DomainError, VerificationError
from .exactlinalg import RationalMatrix, rank, kernel_dimension, compose_is_zero
from .monomial_core import Monomial, MonomialIdeal, HeightCertificate, lcm_dual

__all__ = [
    "MonomialIdealError",
    "ParseError",
    "DomainError",
    "VerificationError",
    "RationalMatrix",
    "rank",
    "kernel_dimension",
    "compose_is_zero",
    "Monomial",
    "MonomialIdeal",
    "HeightCertificate",
    "lcm_dual",
]
