"""
胞腔分解验证模块

对 X_lambda 支撑的自由复形逐项检查：
1. 复形条件 d1·d2 = 0（符号计算与素数代入两种方式）
2. 正合性：lcm 格中每个 b 的子复形 X_{<=b} 在有理数上无圈
3. 极小性：微分中没有单位元
4. 微分元素等于标号之商（带关联矩阵符号）
并与封闭公式、独立的Betti数验证器交叉核对。
"""

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Tuple

import pandas as pd

from ..analysis.ferrers import Partition, strongly_stable_from_partition
from ..core.errors import VerificationError
from ..core.monomial_core import height, lcm_closure, lcm_dual
from ..utils.logger_config import get_logger
from .betti_oracle import graded_betti, multigraded_betti_oracle, total_betti
from .cellular_complex import (
    CellularFreeComplex,
    LabeledComplex,
    boundary_maps,
    build_complex,
    face_cycle_matrix,
    incidence_matrix,
    is_acyclic,
    restrict_complex,
)

logger = get_logger(__name__)


@dataclass
class ResolutionSummary:
    """分解验证结果"""

    lam: Partition
    betti: Tuple[int, int, int]
    shifts: Tuple[int, int, int]
    regularity: int
    projective_dimension: int
    is_linear: bool
    lattice_size: int = 0
    oracle_checked: bool = False
    diagnostics: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "betti": list(self.betti),
            "shifts": list(self.shifts),
            "regularity": self.regularity,
            "projective_dimension": self.projective_dimension,
            "is_linear": self.is_linear,
            "lattice_size": self.lattice_size,
            "oracle_checked": self.oracle_checked,
        }


def closed_form_betti(lam: Partition) -> Tuple[int, int, int]:
    """未截断的封闭公式"""
    m, parts = lam.m, lam.parts
    b1 = sum(parts) - comb(m, 2)
    b2 = parts[0] + 2 * sum(parts[1:]) - m * m
    b3 = sum(parts[1:]) - comb(m + 1, 2) + 1
    return b1, b2, b3


def betti_formulas(lam: Partition) -> Tuple[int, int, int]:
    """
    beta_1 = sum(lambda) - C(m,2)
    beta_2 = lambda_1 + 2(lambda_2 + ... + lambda_m) - m^2
    beta_3 = lambda_2 + ... + lambda_m - C(m+1,2) + 1

    负值截断为0（并记录警告）；合法分拆下不会出现负值。
    """
    raw = closed_form_betti(lam)
    if any(b < 0 for b in raw):
        logger.warning(f"lambda={lam} 的封闭公式出现负值 {raw}，截断为0")
    return tuple(max(b, 0) for b in raw)


def betti_identities(lam: Partition) -> bool:
    """
    beta_1 = mu, beta_2 = 2mu - g - n, beta_3 = mu - g - n + 1
    其中 mu 为生成元个数，g 为高度（应等于 m），n = lambda_1
    """
    ideal = strongly_stable_from_partition(lam)
    mu = ideal.num_generators
    g = height(ideal).height
    n = lam.n
    if g != lam.m:
        logger.warning(f"lambda={lam}: 高度 {g} 不等于行数 {lam.m}")
        return False
    return closed_form_betti(lam) == (mu, 2 * mu - g - n, mu - g - n + 1)


def check_label_consistency(complex_: LabeledComplex, free: CellularFreeComplex) -> None:
    """
    微分元素 = sign(关联矩阵) · label(列胞腔)/label(行胞腔)

    Raises:
        VerificationError: 符号或单项式不一致
    """
    pairs = (
        ("d1", free.d1, incidence_matrix(complex_), complex_.vertices, complex_.edges),
        ("d2", free.d2, face_cycle_matrix(complex_), complex_.edges, complex_.faces),
    )
    for name, entries, signs, row_cells, col_cells in pairs:
        for r, row in enumerate(entries):
            for c, entry in enumerate(row):
                expected_sign = int(signs[r, c])
                if entry is None:
                    if expected_sign:
                        raise VerificationError("label_quotient", {"matrix": name, "entry": (r, c)})
                    continue
                quotient = col_cells[c].label / row_cells[r].label
                if entry.sign != expected_sign or entry.monomial != quotient:
                    raise VerificationError(
                        "label_quotient",
                        {"matrix": name, "entry": (r, c), "found": str(entry)},
                    )


def check_minimality(free: CellularFreeComplex) -> None:
    """
    Raises:
        VerificationError: 微分中出现非零常数
    """
    for name, entries in (("d1", free.d1), ("d2", free.d2)):
        for r, row in enumerate(entries):
            for c, entry in enumerate(row):
                if entry is not None and entry.monomial.is_identity():
                    raise VerificationError("minimality", {"matrix": name, "entry": (r, c)})


def check_acyclicity(complex_: LabeledComplex) -> int:
    """
    lcm 格中每个 b 的 X_{<=b} 无圈

    Returns:
        检查的多重次数个数

    Raises:
        VerificationError: 第一个不无圈的 b
    """
    labels = [v.label for v in complex_.vertices]
    lattice = lcm_closure(labels)
    for b in lattice:
        if not is_acyclic(restrict_complex(complex_, b)):
            raise VerificationError("acyclicity", {"b": list(b.exponents)})
    return len(lattice)


def _step_degrees(complex_: LabeledComplex) -> Dict[int, set]:
    cells = {1: complex_.vertices, 2: complex_.edges, 3: complex_.faces}
    return {i: {cell.label.degree for cell in group} for i, group in cells.items() if group}


def cross_check_oracle(complex_: LabeledComplex, free: CellularFreeComplex) -> None:
    """
    与独立Betti数验证器比较：总Betti数与每个胞腔的多重次数

    Raises:
        VerificationError: 不一致
    """
    table = multigraded_betti_oracle(lcm_dual(strongly_stable_from_partition(complex_.lam)))
    totals = total_betti(table)
    expected = {i: b for i, b in enumerate(free.betti, start=1) if b}
    if totals != expected:
        raise VerificationError("oracle_totals", {"oracle": totals, "cellular": expected})

    cells = {1: complex_.vertices, 2: complex_.edges, 3: complex_.faces}
    cellular = Counter(
        (i, cell.label.exponents) for i, group in cells.items() for cell in group
    )
    if Counter(table) != cellular:
        raise VerificationError(
            "oracle_multidegrees",
            {"oracle": graded_betti(table), "cellular": free.shifts},
        )


def summarize_complex(complex_: LabeledComplex, free: CellularFreeComplex) -> ResolutionSummary:
    """由胞腔标号读出Betti数、正则度、投射维数与线性性（不做验证）"""
    degrees = _step_degrees(complex_)
    is_linear = all(len(d) == 1 for d in degrees.values()) and all(
        min(degrees[i + 1]) == max(degrees[i]) + 1 for i in degrees if i + 1 in degrees
    )
    return ResolutionSummary(
        lam=complex_.lam,
        betti=free.betti,
        shifts=free.shifts,
        regularity=max(max(d) - i for i, d in degrees.items()),
        projective_dimension=max(degrees),
        is_linear=is_linear,
    )


def verify_resolution(lam: Partition, use_oracle: bool = False) -> ResolutionSummary:
    """
    构造并验证 X_lambda 支撑的极小线性自由分解

    Args:
        lam: 满足 lambda_m > m-1 的分拆
        use_oracle: 是否与多重分次Betti数验证器交叉核对

    Returns:
        ResolutionSummary

    Raises:
        VerificationError: 任一检查失败（check 字段标明哪一项）
    """
    complex_ = build_complex(lam)
    free = boundary_maps(complex_)
    summary = summarize_complex(complex_, free)
    summary.diagnostics.append(f"d1·d2 = 0 ({free.betti[0]}x{free.betti[1]} · {free.betti[1]}x{free.betti[2]})")

    dual = lcm_dual(strongly_stable_from_partition(lam))
    if set(free.d0) != set(dual.generators):
        raise VerificationError("vertex_labels", "顶点标号与对偶理想生成元不一致")

    check_label_consistency(complex_, free)
    check_minimality(free)
    summary.diagnostics.append("minimal: no unit entries")

    summary.lattice_size = check_acyclicity(complex_)
    summary.diagnostics.append(f"acyclic over {summary.lattice_size} lcm-lattice degrees")

    if free.betti != betti_formulas(lam):
        raise VerificationError(
            "betti_formula", {"cellular": free.betti, "formula": betti_formulas(lam)}
        )
    if not betti_identities(lam):
        raise VerificationError("betti_identities", {"lambda": str(lam)})
    if lam.m > 1 and free.betti[2]:
        expected = lam.n + lam.m - 3
        if summary.regularity != expected or summary.projective_dimension != 3:
            raise VerificationError(
                "regularity",
                {"reg": summary.regularity, "pd": summary.projective_dimension, "expected_reg": expected},
            )
    summary.diagnostics.append("betti numbers match closed forms")

    if use_oracle:
        cross_check_oracle(complex_, free)
        summary.oracle_checked = True
        summary.diagnostics.append("oracle agrees")

    logger.info(
        f"lambda={lam}: betti={free.betti}, reg={summary.regularity}, "
        f"pd={summary.projective_dimension}"
    )
    return summary


def betti_table(summary: ResolutionSummary) -> pd.DataFrame:
    """Macaulay风格的Betti表：行为 j - i，列为同调位置 i"""
    degrees = {0: 0, 1: summary.shifts[0], 2: summary.shifts[1], 3: summary.shifts[2]}
    values = {0: 1, 1: summary.betti[0], 2: summary.betti[1], 3: summary.betti[2]}
    columns = [i for i in range(4) if values[i]]
    rows = sorted({degrees[i] - i for i in columns})
    table = pd.DataFrame(0, index=rows, columns=columns)
    for i in columns:
        table.loc[degrees[i] - i, i] += values[i]
    table.index.name = "j-i"
    table.columns.name = "i"
    return table


def describe_failure(error: VerificationError) -> str:
    """将验证失败转为单行描述"""
    detail = error.detail
    if isinstance(detail, dict) and "b" in detail:
        return f"{error.check} fails at b={detail['b']}"
    return f"{error.check}: {detail}" if detail is not None else error.check
