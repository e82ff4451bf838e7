"""
Ferrers理想模块

Ferrers图与Ferrers理想、补图边理想、Alexander对偶、Ferrers理想LCM对偶的准素分解、
广义Ferrers理想，以及特化到强稳定二次理想。

变量约定：联合变量表 {x1..xm, y1..yn}，x 变量在前（x_i 下标 i-1，y_j 下标 m+j-1）。
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx

from ..core.errors import (
    AmbientMismatchError,
    HypothesisError,
    InvalidPartitionError,
    InvalidShiftError,
    NonSquarefreeError,
)
from ..core.io_formats import bipartite_names
from ..core.monomial_core import (
    Monomial,
    MonomialIdeal,
    intersect,
    is_equigenerated,
    is_strongly_stable,
)
from ..utils.logger_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Partition:
    """分拆 lambda_1 >= ... >= lambda_m >= 1；m 为行数，n = lambda_1 为列数"""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise InvalidPartitionError("分拆不能为空")
        if any(p < 1 for p in parts):
            raise InvalidPartitionError(f"分拆各部分必须 >= 1: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartitionError(f"分拆必须单调不增: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return self.parts[0]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def is_strongly_stable_shape(self) -> bool:
        """mu = (0, 1, ..., m-1) 合法，即 lambda_m > m-1"""
        return self.parts[-1] > self.m - 1

    def require_strongly_stable_shape(self) -> None:
        if not self.is_strongly_stable_shape():
            raise InvalidPartitionError(
                f"分拆 {self.parts} 不满足 lambda_m > m-1（m={self.m}）"
            )

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Shift:
    """平移向量 mu，要求 0 <= mu_1 <= ... <= mu_m < lambda_m"""

    mu: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(v) for v in self.mu))

    @classmethod
    def staircase(cls, m: int) -> "Shift":
        """mu = (0, 1, ..., m-1)"""
        return cls(tuple(range(m)))

    def validate(self, lam: Partition) -> None:
        mu = self.mu
        if len(mu) != lam.m:
            raise InvalidShiftError(f"mu 长度 {len(mu)} 与分拆行数 {lam.m} 不符")
        if mu[0] < 0 or any(a > b for a, b in zip(mu, mu[1:])):
            raise InvalidShiftError(f"mu 必须非负且单调不减: {mu}")
        if mu[-1] >= lam.parts[-1]:
            raise InvalidShiftError(f"mu_m={mu[-1]} 必须小于 lambda_m={lam.parts[-1]}")


@dataclass(frozen=True)
class BipartiteGraph:
    """二部图：x 侧 m 个顶点，y 侧 n 个顶点，边为 (i, j)（下标从1开始）"""

    x_count: int
    y_count: int
    edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if not (1 <= i <= self.x_count and 1 <= j <= self.y_count):
                raise ValueError(f"边 ({i},{j}) 超出顶点范围")
        object.__setattr__(self, "edges", edges)

    @property
    def vertex_order(self) -> List[str]:
        return bipartite_names(self.x_count, self.y_count)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertex_order)
        graph.add_edges_from((f"x{i}", f"y{j}") for i, j in self.edges)
        return graph


@dataclass(frozen=True)
class PrimeComponent:
    """由变量生成的素理想（联合变量表上的下标集合）"""

    variables: FrozenSet[int]

    def __post_init__(self):
        variables = frozenset(self.variables)
        if not variables:
            raise ValueError("素分量不能为空")
        object.__setattr__(self, "variables", variables)

    def to_ideal(self, n: int) -> MonomialIdeal:
        return MonomialIdeal.prime(n, sorted(self.variables))

    def names(self, var_names: Sequence[str]) -> List[str]:
        return [var_names[i] for i in sorted(self.variables)]


def _x(i: int) -> int:
    """x_i 的下标（i 从1开始）"""
    return i - 1


def _y(lam: Partition, j: int) -> int:
    """y_j 的下标（j 从1开始）"""
    return lam.m + j - 1


def _xy(lam: Partition, i: int, j: int) -> Monomial:
    return Monomial.from_support(lam.m + lam.n, (_x(i), _y(lam, j)))


def ferrers_graph(lam: Partition) -> BipartiteGraph:
    """Ferrers图：x_i 与 y_j 相邻当且仅当 j <= lambda_i"""
    return BipartiteGraph(
        lam.m,
        lam.n,
        frozenset((i, j) for i in range(1, lam.m + 1) for j in range(1, lam.parts[i - 1] + 1)),
    )


def edge_ideal(graph: nx.Graph, vertex_order: Sequence[str]) -> MonomialIdeal:
    """图的边理想：每条边 {u, v} 对应 x_u·x_v"""
    position = {v: k for k, v in enumerate(vertex_order)}
    n = len(vertex_order)
    return MonomialIdeal(
        n, tuple(Monomial.from_support(n, (position[u], position[v])) for u, v in graph.edges)
    )


def ferrers_ideal(lam: Partition) -> MonomialIdeal:
    """
    Ferrers理想 I_lambda：x_i·y_j（1 <= j <= lambda_i）生成

    Args:
        lam: 分拆

    Returns:
        m+n 个变量上的理想，生成元个数为 sum(lambda)
    """
    return MonomialIdeal(
        lam.m + lam.n,
        tuple(_xy(lam, i, j) for i in range(1, lam.m + 1) for j in range(1, lam.parts[i - 1] + 1)),
    )


def complement_edge_ideal(
    graph: Union[BipartiteGraph, nx.Graph], vertex_order: Optional[Sequence[str]] = None
) -> MonomialIdeal:
    """
    补图的边理想（在所有顶点对上取补，包括 x-x 与 y-y 对）

    Args:
        graph: 二部图或一般简单图
        vertex_order: 一般图的顶点顺序（二部图时取 x1..xm, y1..yn）

    Returns:
        补图边理想
    """
    if isinstance(graph, BipartiteGraph):
        vertex_order = graph.vertex_order
        graph = graph.to_networkx()
    elif vertex_order is None:
        vertex_order = list(graph.nodes)
    complement = nx.complement(graph)
    return edge_ideal(complement, vertex_order)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """
    无平方理想的Alexander对偶：各生成元支撑集生成的素理想之交

    零理想的对偶为单位理想（空交）。

    Raises:
        NonSquarefreeError: 存在非无平方生成元
    """
    if not ideal.is_squarefree():
        bad = [str(g) for g in ideal.generators if not g.is_squarefree()]
        raise NonSquarefreeError(f"Alexander对偶要求无平方生成元: {bad}")
    n = ideal.ambient_n
    return reduce(
        intersect,
        (MonomialIdeal.prime(n, g.support) for g in ideal.generators),
        MonomialIdeal.unit(n),
    )


def intersect_all(components: Iterable[PrimeComponent], n: int) -> MonomialIdeal:
    """素分量之交；空列表给出单位理想"""
    return reduce(intersect, (c.to_ideal(n) for c in components), MonomialIdeal.unit(n))


def is_irredundant(components: Sequence[PrimeComponent]) -> bool:
    """任意两个分量互不包含"""
    for a, b in combinations(components, 2):
        if a.variables <= b.variables or b.variables <= a.variables:
            return False
    return True


def ferrers_dual_primary_decomposition(lam: Partition) -> List[PrimeComponent]:
    """
    Ferrers理想LCM对偶的准素分解（闭式公式，不做计算）

    分量：所有 (x_i, x_j)（i<j）、所有 (y_i, y_j)（i<j），
    以及每个非边 x_i·y_j ∉ I_lambda 对应的 (x_i, y_j)。
    """
    components = [
        PrimeComponent(frozenset((_x(i), _x(j))))
        for i, j in combinations(range(1, lam.m + 1), 2)
    ]
    components += [
        PrimeComponent(frozenset((_y(lam, i), _y(lam, j))))
        for i, j in combinations(range(1, lam.n + 1), 2)
    ]
    components += [
        PrimeComponent(frozenset((_x(i), _y(lam, j))))
        for i in range(1, lam.m + 1)
        for j in range(lam.parts[i - 1] + 1, lam.n + 1)
    ]
    return components


def generalized_ferrers_ideal(lam: Partition, mu: Shift) -> MonomialIdeal:
    """
    广义Ferrers理想 I_{lambda-mu}：x_i·y_j（mu_i < j <= lambda_i）生成

    Raises:
        InvalidShiftError: mu 不合法
        InvalidPartitionError: 不满足 n >= m
    """
    mu.validate(lam)
    if lam.n < lam.m:
        raise InvalidPartitionError(f"广义Ferrers理想要求 n >= m: n={lam.n}, m={lam.m}")
    return MonomialIdeal(
        lam.m + lam.n,
        tuple(
            _xy(lam, i, j)
            for i in range(1, lam.m + 1)
            for j in range(mu.mu[i - 1] + 1, lam.parts[i - 1] + 1)
        ),
    )


def shift_preserves_generator_count(lam: Partition, mu: Shift) -> bool:
    """mu_i >= i-1 时，广义Ferrers理想与其特化的生成元个数均为 sum(lambda) - sum(mu)"""
    ideal = generalized_ferrers_ideal(lam, mu)
    expected = lam.size - sum(mu.mu)
    special = specialize(ideal, lam.m, lam.n)
    return ideal.num_generators == special.num_generators == expected


def specialize(ideal: MonomialIdeal, m: int, n: int) -> MonomialIdeal:
    """
    特化映射 y_i -> x_i，结果位于 k = max(m, n) 个变量上

    Args:
        ideal: m+n 个变量（x 在前）上的理想
        m: x 变量个数
        n: y 变量个数

    Returns:
        极小化后的特化理想
    """
    if ideal.ambient_n != m + n:
        raise AmbientMismatchError(f"理想变量个数 {ideal.ambient_n} 与 m+n={m + n} 不符")
    k = max(m, n)
    images = []
    for g in ideal.generators:
        exps = [0] * k
        for i in range(m):
            exps[i] += g.exponents[i]
        for j in range(n):
            exps[j] += g.exponents[m + j]
        images.append(Monomial(tuple(exps)))
    return MonomialIdeal(k, tuple(images))


def strongly_stable_from_partition(lam: Partition) -> MonomialIdeal:
    """
    由分拆得到强稳定二次理想：mu = (0, 1, ..., m-1) 的广义Ferrers理想的特化

    Raises:
        InvalidPartitionError: lambda_m <= m-1
    """
    lam.require_strongly_stable_shape()
    ideal = specialize(generalized_ferrers_ideal(lam, Shift.staircase(lam.m)), lam.m, lam.n)
    logger.debug(f"强稳定理想 lambda={lam}: {ideal.num_generators} 个生成元")
    return ideal


def tableau(ideal: MonomialIdeal) -> Set[Tuple[int, int]]:
    """二次理想的Ferrers表格单元 {(i, j) : x_i·x_j ∈ I, i <= j}（下标从1开始）"""
    cells = set()
    for g in ideal.generators:
        if g.degree != 2:
            continue
        support = g.support
        i, j = (support[0], support[0]) if len(support) == 1 else support
        cells.add((i + 1, j + 1))
    return cells


def partition_from_strongly_stable(ideal: MonomialIdeal) -> Partition:
    """
    由强稳定二次理想恢复分拆：lambda_i = max{j : x_i·x_j ∈ I}

    Raises:
        HypothesisError: 非强稳定或非二次等次生成
    """
    if ideal.is_zero() or is_equigenerated(ideal) != 2:
        raise HypothesisError("要求由二次单项式等次生成的理想")
    if not is_strongly_stable(ideal):
        raise HypothesisError("要求强稳定理想")
    cells = tableau(ideal)
    rows = sorted({i for i, _ in cells})
    lam = Partition(tuple(max(j for r, j in cells if r == i) for i in rows))
    rebuilt = strongly_stable_from_partition(lam)
    if tableau(rebuilt) != cells:
        raise HypothesisError(f"理想的表格与分拆 {lam} 不一致")
    return lam
