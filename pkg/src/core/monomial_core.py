"""
单项式与单项式理想模块

提供单项式、具有规范极小生成元组的单项式理想，以及LCM对偶及其代数性质：
- 极小化与分次字典序规范排序
- lcm、LCM对偶、乘积、交、成员判定
- 高度（最小变量覆盖）、等次生成、强稳定性判定
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from .errors import (
    AmbientMismatchError,
    ScaleGuardError,
    UnitIdealError,
    ZeroIdealError,
)
from ..utils.logger_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Monomial:
    """单项式：固定变量表上的指数向量"""

    exponents: Tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"指数必须非负: {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def identity(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, index: int, power: int = 1) -> "Monomial":
        """第 index 个变量（从0开始）的 power 次幂"""
        exps = [0] * n
        exps[index] = power
        return cls(tuple(exps))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "Monomial":
        """由变量下标集合构造无平方单项式"""
        exps = [0] * n
        for index in support:
            exps[index] = 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def _check(self, other: "Monomial") -> None:
        if other.n != self.n:
            raise AmbientMismatchError(f"单项式变量个数不一致: {self.n} 与 {other.n}")

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """精确商；要求 other 整除 self"""
        if not other.divides(self):
            raise ValueError(f"{other} 不整除 {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self) -> Tuple:
        """分次字典序：先按次数升序，同次数按字典序降序（x1 > x2 > ...）"""
        return (self.degree, tuple(-e for e in self.exponents))

    def __str__(self) -> str:
        factors = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e > 1:
                factors.append(f"x{i + 1}^{e}")
        return "*".join(factors) if factors else "1"


def _minimal_generators(gens: Sequence[Monomial], n: int) -> Tuple[Monomial, ...]:
    """去重、删除被其他生成元严格整除者、规范排序"""
    unique = sorted({g for g in gens}, key=Monomial.sort_key)
    if len(unique) <= 1:
        return tuple(unique)
    exps = np.array([g.exponents for g in unique], dtype=np.int64).reshape(len(unique), n)
    # divides[i, j] 表示 g_i | g_j
    divides = np.all(exps[:, None, :] <= exps[None, :, :], axis=2)
    np.fill_diagonal(divides, False)
    keep = ~divides.any(axis=0)
    return tuple(g for g, k in zip(unique, keep) if k)


@dataclass(frozen=True)
class MonomialIdeal:
    """
    单项式理想：变量个数 + 规范极小生成元组

    构造时总是极小化并排序，因此结构相等即理想相等。
    零理想用空生成元组表示；单位理想用单个恒等单项式表示。
    """

    ambient_n: int
    generators: Tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        if self.ambient_n < 1:
            raise ValueError(f"变量个数必须 >= 1，当前为 {self.ambient_n}")
        gens = tuple(self.generators)
        for g in gens:
            if g.n != self.ambient_n:
                raise AmbientMismatchError(
                    f"单项式 {g} 的长度 {g.n} 与变量个数 {self.ambient_n} 不符"
                )
        object.__setattr__(self, "generators", _minimal_generators(gens, self.ambient_n))

    @classmethod
    def from_exponents(cls, n: int, exponents: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(n, tuple(Monomial(tuple(e)) for e in exponents))

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial.identity(n),))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def prime(cls, n: int, variables: Iterable[int]) -> "MonomialIdeal":
        """由变量生成的素理想 (x_i : i in variables)"""
        return cls(n, tuple(Monomial.variable(n, i) for i in variables))

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_identity()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return contains_monomial(self, m)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return ", ".join(str(g) for g in self.generators)


@dataclass(frozen=True)
class HeightCertificate:
    """高度证书：高度值与达到最小值的变量集合（下标从0开始）"""

    height: int
    witness_prime: Tuple[int, ...]


def minimalize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """
    由任意单项式列表构造规范的单项式理想

    Args:
        gens: 单项式列表
        n: 变量个数

    Returns:
        极小生成的 MonomialIdeal

    Raises:
        AmbientMismatchError: 某个单项式长度不等于 n
    """
    return MonomialIdeal(n, tuple(gens))


def _require_same_ambient(i: MonomialIdeal, j: MonomialIdeal) -> None:
    if i.ambient_n != j.ambient_n:
        raise AmbientMismatchError(f"理想变量个数不一致: {i.ambient_n} 与 {j.ambient_n}")


def _require_nonzero(ideal: MonomialIdeal, operation: str) -> None:
    if ideal.is_zero():
        raise ZeroIdealError(f"{operation} 要求非零理想")


def lcm_of_ideal(ideal: MonomialIdeal) -> Monomial:
    """
    m_I：极小生成元指数向量的逐分量最大值

    Raises:
        ZeroIdealError: 零理想
    """
    _require_nonzero(ideal, "lcm")
    exps = np.array([g.exponents for g in ideal.generators], dtype=np.int64)
    return Monomial(tuple(int(e) for e in exps.max(axis=0)))


def dual_generator_list(ideal: MonomialIdeal) -> List[Monomial]:
    """按 I 的规范顺序给出 [m_I/f_1, ..., m_I/f_nu]（不重新排序）"""
    m = lcm_of_ideal(ideal)
    return [m / f for f in ideal.generators]


def lcm_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """
    LCM对偶：由 {m_I / f_i} 生成的理想

    Raises:
        ZeroIdealError: 零理想
    """
    # 整除关系反序，对偶生成元必然极小
    return MonomialIdeal(ideal.ambient_n, tuple(dual_generator_list(ideal)))


def product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """理想乘积：所有 f_j·g_k 生成的极小化理想"""
    _require_same_ambient(i, j)
    return MonomialIdeal(
        i.ambient_n, tuple(f * g for f in i.generators for g in j.generators)
    )


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """理想的 k 次幂（k >= 0）"""
    if k < 0:
        raise ValueError("幂次必须非负")
    result = MonomialIdeal.unit(ideal.ambient_n)
    for _ in range(k):
        result = product(result, ideal)
    return result


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """理想交：{lcm(f, g)} 生成的极小化理想"""
    _require_same_ambient(i, j)
    return MonomialIdeal(
        i.ambient_n, tuple(f.lcm(g) for f in i.generators for g in j.generators)
    )


def contains_monomial(ideal: MonomialIdeal, m: Monomial) -> bool:
    """
    成员判定：存在生成元整除 m

    Raises:
        AmbientMismatchError: 变量个数不一致
    """
    if m.n != ideal.ambient_n:
        raise AmbientMismatchError(f"单项式长度 {m.n} 与变量个数 {ideal.ambient_n} 不符")
    return any(g.divides(m) for g in ideal.generators)


def height(ideal: MonomialIdeal) -> HeightCertificate:
    """
    高度：覆盖所有生成元支撑集的最小变量集合的大小

    按基数递增穷举变量子集，返回第一个覆盖及其见证。

    Raises:
        ZeroIdealError: 零理想
        UnitIdealError: 单位理想
        ScaleGuardError: 相关变量数超过 Config.HEIGHT_MAX_VARIABLES
    """
    _require_nonzero(ideal, "height")
    if ideal.is_unit():
        raise UnitIdealError("height 要求真理想")

    supports = [set(g.support) for g in ideal.generators]
    candidates = sorted(set().union(*supports))
    if len(candidates) > Config.HEIGHT_MAX_VARIABLES:
        raise ScaleGuardError(
            f"高度穷举涉及 {len(candidates)} 个变量，超过上限 {Config.HEIGHT_MAX_VARIABLES}"
        )

    for size in range(1, len(candidates) + 1):
        for subset in combinations(candidates, size):
            chosen = set(subset)
            if all(support & chosen for support in supports):
                return HeightCertificate(height=size, witness_prime=tuple(subset))
    # 所有相关变量必然构成一个覆盖
    raise AssertionError("unreachable")


def is_equigenerated(ideal: MonomialIdeal) -> Optional[int]:
    """所有极小生成元次数相同时返回该次数，否则返回 None"""
    _require_nonzero(ideal, "is_equigenerated")
    degrees = {g.degree for g in ideal.generators}
    return degrees.pop() if len(degrees) == 1 else None


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    """
    强稳定性：对每个生成元 f、每个 x_i | f 及 j < i，有 x_j·f/x_i ∈ I

    只需在极小生成元上检查交换性质。
    """
    n = ideal.ambient_n
    for f in ideal.generators:
        for i in f.support:
            reduced = f / Monomial.variable(n, i)
            for j in range(i):
                if not contains_monomial(ideal, reduced * Monomial.variable(n, j)):
                    logger.debug(f"强稳定性失败: 生成元 {f}, x{i + 1} -> x{j + 1}")
                    return False
    return True


def lcm_closure(monomials: Sequence[Monomial], limit: Optional[int] = None) -> List[Monomial]:
    """
    lcm格：单项式集合在两两lcm下的闭包（不含空集的lcm）

    Args:
        monomials: 非空单项式列表
        limit: 闭包大小上限，None时使用 Config.MAX_LATTICE_SIZE

    Returns:
        按分次字典序排序的闭包元素

    Raises:
        ScaleGuardError: 闭包超过上限
    """
    limit = limit or Config.MAX_LATTICE_SIZE
    base = list(dict.fromkeys(monomials))
    closure = set(base)
    frontier = set(base)
    while frontier:
        new = set()
        for a in frontier:
            for b in base:
                c = a.lcm(b)
                if c not in closure:
                    new.add(c)
        closure |= new
        if len(closure) > limit:
            raise ScaleGuardError(f"lcm格大小超过上限 {limit}")
        frontier = new
    return sorted(closure, key=Monomial.sort_key)
