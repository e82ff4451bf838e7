"""
多重分次Betti数验证器

独立于胞腔复形：对 lcm 格中每个多重次数 b，构造上Koszul单纯复形
    K^b(I) = {无平方 tau ⊆ supp(b) : x^{b - tau} ∈ I}
并计算 beta_{i,b}(R/I) = dim H~_{i-2}(K^b; Q)（i >= 1）。
仅在 lcm 格上可能非零。
"""

from collections import defaultdict
from itertools import combinations
from typing import Dict, List, Tuple

from config import Config

from ..core.errors import ScaleGuardError, ZeroIdealError
from ..core.exactlinalg import RationalMatrix, rank
from ..core.monomial_core import Monomial, MonomialIdeal, contains_monomial, lcm_closure
from ..utils.logger_config import get_logger

logger = get_logger(__name__)

Simplex = Tuple[int, ...]
MultigradedBetti = Dict[Tuple[int, Tuple[int, ...]], int]


def upper_koszul_complex(ideal: MonomialIdeal, b: Monomial) -> Dict[int, List[Simplex]]:
    """
    K^b(I) 按维数分组的面；维数 -1 对应空面（当 x^b ∈ I）

    Returns:
        {维数: 排序后的面列表}
    """
    faces: Dict[int, List[Simplex]] = defaultdict(list)
    support = b.support
    for size in range(len(support) + 1):
        for tau in combinations(support, size):
            quotient = b / Monomial.from_support(b.n, tau)
            if contains_monomial(ideal, quotient):
                faces[size - 1].append(tau)
    return dict(faces)


def _boundary(upper: List[Simplex], lower: List[Simplex]) -> RationalMatrix:
    """单纯边界矩阵 C_k -> C_{k-1}，删去第 t 个顶点的符号为 (-1)^t"""
    index = {face: r for r, face in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for c, face in enumerate(upper):
        for t in range(len(face)):
            rows[index[face[:t] + face[t + 1:]]][c] = (-1) ** t
    return RationalMatrix.from_rows(rows, cols=len(upper))


def reduced_simplicial_homology(faces: Dict[int, List[Simplex]]) -> Dict[int, int]:
    """
    约化同调维数 {k: dim H~_k}，只列出非零项

    空复形（没有空面）同调全为零；只有空面的复形 H~_{-1} = 1。
    """
    if not faces:
        return {}
    top = max(faces)
    ranks = {}
    for k in range(0, top + 1):
        upper, lower = faces.get(k, []), faces.get(k - 1, [])
        ranks[k] = rank(_boundary(upper, lower)) if upper and lower else 0
    result = {}
    for k in range(-1, top + 1):
        dim = len(faces.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if dim:
            result[k] = dim
    return result


def multigraded_betti_oracle(ideal: MonomialIdeal) -> MultigradedBetti:
    """
    R/I 的多重分次Betti数 {(i, b的指数向量): beta_{i,b}}，i >= 1

    Raises:
        ZeroIdealError: 零理想
        ScaleGuardError: 生成元个数超过 Config.MAX_SCALE，或lcm格超过上限
    """
    if ideal.is_zero():
        raise ZeroIdealError("Betti数验证器要求非零理想")
    if ideal.num_generators > Config.MAX_SCALE:
        raise ScaleGuardError(
            f"生成元个数 {ideal.num_generators} 超过上限 {Config.MAX_SCALE}"
            "（可通过 MONOMIDEAL_MAX_SCALE 调整）"
        )
    lattice = lcm_closure(list(ideal.generators))
    logger.debug(f"lcm格大小: {len(lattice)}")

    table: MultigradedBetti = {}
    for b in lattice:
        homology = reduced_simplicial_homology(upper_koszul_complex(ideal, b))
        for k, dim in homology.items():
            table[(k + 2, b.exponents)] = dim
    return table


def total_betti(table: MultigradedBetti) -> Dict[int, int]:
    """按同调位置 i 汇总"""
    totals: Dict[int, int] = defaultdict(int)
    for (i, _), value in table.items():
        totals[i] += value
    return dict(sorted(totals.items()))


def graded_betti(table: MultigradedBetti) -> Dict[int, Dict[int, int]]:
    """{i: {总次数 j: beta_{i,j}}}"""
    graded: Dict[int, Dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for (i, exps), value in table.items():
        graded[i][sum(exps)] += value
    return {i: dict(sorted(row.items())) for i, row in sorted(graded.items())}
