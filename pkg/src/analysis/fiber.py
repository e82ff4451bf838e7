"""
特殊纤维环模块

生成元之间的环面（二项式）关系、特殊纤维环同构的有界次数验证、纤维环维数，
以及强稳定二次理想的对称矩阵2x2子式表示。

生成元下标从1开始（对应 T_1..T_nu），按理想的规范顺序编号；
对偶理想按位置对应 f_i -> m_I/f_i，不重新排序。
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product as cartesian
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..core.errors import HypothesisError
from ..core.exactlinalg import RationalMatrix, rank
from ..core.monomial_core import (
    Monomial,
    MonomialIdeal,
    dual_generator_list,
    height,
    is_equigenerated,
)
from ..utils.logger_config import get_logger
from .ferrers import Partition, strongly_stable_from_partition, tableau

logger = get_logger(__name__)

Multiset = Tuple[int, ...]
Position = Tuple[int, int]


@dataclass(frozen=True)
class RelationPair:
    """
    环面关系 T_beta - T_alpha：两个不同的下标多重集，生成元乘积相同

    规范存储：字典序较小的多重集在前。
    """

    alpha: Multiset
    beta: Multiset

    def __post_init__(self):
        a, b = tuple(sorted(self.alpha)), tuple(sorted(self.beta))
        if len(a) != len(b):
            raise ValueError(f"关系两侧次数不同: {a} / {b}")
        if a == b:
            raise ValueError(f"关系两侧相同: {a}")
        if b < a:
            a, b = b, a
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def degree(self) -> int:
        return len(self.alpha)

    def holds_for(self, generators: Sequence[Monomial]) -> bool:
        """在给定生成元列表上 f_alpha == f_beta"""
        return _product(generators, self.alpha) == _product(generators, self.beta)

    def to_json(self) -> List[List[int]]:
        return [list(self.alpha), list(self.beta)]


@dataclass(frozen=True)
class SymmetricPresentation:
    """对称矩阵 S_lambda：变量位置集合与全部非零2x2子式"""

    lam: Partition
    variable_positions: FrozenSet[Position]
    minors: Tuple[Tuple[Position, Position, Position, Position], ...]

    def minor_relations(self, index_of: Dict[Position, int]) -> Set[RelationPair]:
        """子式 S_ij S_kl - S_il S_kj 转换为生成元下标关系"""
        relations = set()
        for (ij, il, kj, kl) in self.minors:
            left = (index_of[ij], index_of[kl])
            right = (index_of[il], index_of[kj])
            if sorted(left) != sorted(right):
                relations.add(RelationPair(left, right))
        return relations


def _product(generators: Sequence[Monomial], indices: Multiset) -> Monomial:
    n = generators[0].n
    result = Monomial.identity(n)
    for index in indices:
        result = result * generators[index - 1]
    return result


def _require_degree(r: int) -> None:
    if r < 1:
        raise HypothesisError(f"关系次数必须 >= 1，当前为 {r}")


def _relations_of(generators: Sequence[Monomial], r: int) -> Set[RelationPair]:
    """多重集枚举：按乘积分组，同组内两两成关系"""
    if not generators:
        return set()
    groups: Dict[Monomial, List[Multiset]] = defaultdict(list)
    for multiset in combinations_with_replacement(range(1, len(generators) + 1), r):
        groups[_product(generators, multiset)].append(multiset)
    return {
        RelationPair(a, b)
        for members in groups.values()
        if len(members) > 1
        for a, b in combinations(members, 2)
    }


def toric_relations(ideal: MonomialIdeal, r: int) -> Set[RelationPair]:
    """
    r 次环面关系：所有生成元乘积相同的不同 r 元多重集对（穷举枚举）

    Args:
        ideal: 非零单项式理想
        r: 次数（>= 1）

    Returns:
        RelationPair 集合

    Raises:
        HypothesisError: r < 1
    """
    _require_degree(r)
    return _relations_of(list(ideal.generators), r)


def toric_relations_bruteforce(ideal: MonomialIdeal, r: int) -> Set[RelationPair]:
    """独立实现：枚举有序 r 元组，按乘积指数向量哈希后规范化"""
    _require_degree(r)
    generators = list(ideal.generators)
    buckets: Dict[Tuple[int, ...], Set[Multiset]] = defaultdict(set)
    for ordered in cartesian(range(len(generators)), repeat=r):
        exps = np.sum([generators[k].exponents for k in ordered], axis=0)
        buckets[tuple(int(e) for e in exps)].add(tuple(sorted(k + 1 for k in ordered)))
    relations = set()
    for members in buckets.values():
        for a, b in combinations(sorted(members), 2):
            relations.add(RelationPair(a, b))
    return relations


def check_fiber_hypotheses(ideal: MonomialIdeal) -> int:
    """
    检查特殊纤维环同构定理的假设：高度 >= 2 且等次生成

    Returns:
        公共次数

    Raises:
        HypothesisError: 假设不成立
    """
    if ideal.is_zero() or ideal.is_unit():
        raise HypothesisError("要求非零真理想")
    certificate = height(ideal)
    if certificate.height < 2:
        raise HypothesisError(
            f"height {certificate.height}: 定理要求高度 >= 2"
            f"（见证变量 {[f'x{i + 1}' for i in certificate.witness_prime]}）"
        )
    degree = is_equigenerated(ideal)
    if degree is None:
        raise HypothesisError("定理要求理想等次生成")
    return degree


def relation_counts(ideal: MonomialIdeal, r_max: int) -> Dict[str, Dict[int, int]]:
    """I 与其对偶在各次数上的关系个数"""
    _require_degree(r_max)
    dual = dual_generator_list(ideal)
    primal = list(ideal.generators)
    return {
        "ideal": {r: len(_relations_of(primal, r)) for r in range(1, r_max + 1)},
        "dual": {r: len(_relations_of(dual, r)) for r in range(1, r_max + 1)},
    }


def verify_fiber_isomorphism(ideal: MonomialIdeal, r_max: int) -> bool:
    """
    有界次数验证 F(I) ≅ F(Î)：对每个 r <= r_max，I 与 Î 的关系集（按位置对应）相同

    Args:
        ideal: 高度 >= 2 的等次生成理想
        r_max: 次数上界

    Returns:
        关系集是否逐次一致

    Raises:
        HypothesisError: r_max < 1，或定理假设不成立（与关系不一致区分开）
    """
    _require_degree(r_max)
    check_fiber_hypotheses(ideal)
    primal = list(ideal.generators)
    dual = dual_generator_list(ideal)
    for r in range(1, r_max + 1):
        ours, theirs = _relations_of(primal, r), _relations_of(dual, r)
        if ours != theirs:
            logger.warning(
                f"次数 {r} 关系不一致: I 有 {len(ours)} 个, 对偶有 {len(theirs)} 个"
            )
            return False
        logger.debug(f"次数 {r}: {len(ours)} 个关系一致")
    return True


def fiber_dimension(ideal: MonomialIdeal) -> int:
    """
    特殊纤维环的Krull维数：生成元指数矩阵（nu x n）在有理数上的秩

    Raises:
        HypothesisError: 非等次生成
    """
    if ideal.is_zero() or is_equigenerated(ideal) is None:
        raise HypothesisError("纤维环维数计算要求等次生成的理想")
    return rank(RationalMatrix.from_rows([list(g.exponents) for g in ideal.generators]))


def position_index(ideal: MonomialIdeal) -> Dict[Position, int]:
    """表格位置 (i, j) 到生成元下标（从1开始）的对应"""
    index = {}
    for k, g in enumerate(ideal.generators, start=1):
        support = g.support
        i, j = (support[0], support[0]) if len(support) == 1 else support
        index[(i + 1, j + 1)] = k
    return index


def _canonical(a: int, b: int) -> Position:
    return (min(a, b), max(a, b))


def symmetric_minors(lam: Partition) -> SymmetricPresentation:
    """
    对称矩阵 S_lambda 的全部非零2x2子式

    S 为 n x n 对称矩阵，(a, b) 处为变量 T_{min,max}（x_a·x_b ∈ I）否则为0；
    只保留四个元素均为变量的子式（行对 a<c，列对 b<d）。
    """
    ideal = strongly_stable_from_partition(lam)
    positions = frozenset(tableau(ideal))
    size = lam.n
    minors = set()
    for a, c in combinations(range(1, size + 1), 2):
        for b, d in combinations(range(1, size + 1), 2):
            ij, il = _canonical(a, b), _canonical(a, d)
            kj, kl = _canonical(c, b), _canonical(c, d)
            if {ij, il, kj, kl} <= positions:
                minors.add((ij, il, kj, kl))
    return SymmetricPresentation(lam, positions, tuple(sorted(minors)))


def cross_positions_present(lam: Partition) -> bool:
    """
    对称矩阵的交叉位置性质：若 (i,j), (k,l) 均为变量位置且 i<k、j<l，
    则 (i,l) 与 (k,j)（对称化后）也是变量位置
    """
    positions = tableau(strongly_stable_from_partition(lam))
    for (i, j), (k, l) in combinations(sorted(positions), 2):
        if i < k and j < l:
            if _canonical(i, l) not in positions or _canonical(k, j) not in positions:
                logger.warning(f"交叉位置缺失: ({i},{j}), ({k},{l})")
                return False
    return True


def minors_match_relations(lam: Partition) -> Dict[str, bool]:
    """
    比较子式集合与二次环面关系

    Returns:
        {"minors_in_ideal": 子式都是 I 的关系,
         "minors_in_dual": 子式都是 Î 的关系（按位置对应）,
         "minors_equal_degree2": 子式集合等于 I 的全部二次关系}
    """
    ideal = strongly_stable_from_partition(lam)
    presentation = symmetric_minors(lam)
    minors = presentation.minor_relations(position_index(ideal))
    primal = list(ideal.generators)
    dual = dual_generator_list(ideal)
    degree2 = _relations_of(primal, 2)
    return {
        "minors_in_ideal": all(rel.holds_for(primal) for rel in minors),
        "minors_in_dual": all(rel.holds_for(dual) for rel in minors),
        "minors_equal_degree2": minors == degree2,
    }


def relations_to_json(relations: Set[RelationPair]) -> List[List[List[int]]]:
    """关系序列化为排序后的下标多重集对，如 [[1,3],[2,2]]"""
    return sorted(rel.to_json() for rel in relations)
