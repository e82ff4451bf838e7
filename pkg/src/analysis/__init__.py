"""
分析模块

包含理想族相关功能：
- Ferrers理想、准素分解与特化
- 特殊纤维环关系与对称矩阵子式
- 随机性质检验与定理穷举
"""

from .ferrers import (
    Partition,
    Shift,
    ferrers_dual_primary_decomposition,
    ferrers_ideal,
    generalized_ferrers_ideal,
    specialize,
    strongly_stable_from_partition,
)
from .fiber import RelationPair, toric_relations, verify_fiber_isomorphism

__all__ = [
    "Partition",
    "RelationPair",
    "Shift",
    "ferrers_dual_primary_decomposition",
    "ferrers_ideal",
    "generalized_ferrers_ideal",
    "specialize",
    "strongly_stable_from_partition",
    "toric_relations",
    "verify_fiber_isomorphism",
]
