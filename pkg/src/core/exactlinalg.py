"""
精确线性代数模块

有理数上的稠密矩阵：秩、零空间维数与矩阵乘积判零。
秩通过无分数（Bareiss）消元计算，全程不使用浮点数。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

from .errors import AmbientMismatchError

Number = Union[int, Fraction]


@dataclass(frozen=True)
class RationalMatrix:
    """有理数稠密矩阵（行优先存储，不可变）"""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"矩阵维数必须非负: {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"元素个数 {len(self.entries)} 与维数 {self.rows}x{self.cols} 不符"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]], cols: Optional[int] = None) -> "RationalMatrix":
        """
        由嵌套列表构造矩阵

        Args:
            rows: 行列表
            cols: 列数；行列表为空时用于指定形状

        Returns:
            RationalMatrix
        """
        n_rows = len(rows)
        n_cols = len(rows[0]) if n_rows else (cols or 0)
        if cols is not None and n_rows and cols != n_cols:
            raise ValueError(f"列数不一致: 期望 {cols}, 实际 {n_cols}")
        entries: List[Fraction] = []
        for row in rows:
            if len(row) != n_cols:
                raise ValueError("各行长度不一致")
            entries.extend(Fraction(value) for value in row)
        return cls(n_rows, n_cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)], cols=size
        )

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        r, c = index
        return self.entries[r * self.cols + c]

    def to_rows(self) -> List[List[Fraction]]:
        return [
            list(self.entries[r * self.cols:(r + 1) * self.cols]) for r in range(self.rows)
        ]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols,
            self.rows,
            tuple(self[r, c] for c in range(self.cols) for r in range(self.rows)),
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return multiply(self, other)


def multiply(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """
    精确矩阵乘法

    Raises:
        AmbientMismatchError: a.cols != b.rows
    """
    if a.cols != b.rows:
        raise AmbientMismatchError(f"矩阵维数不匹配: {a.rows}x{a.cols} 与 {b.rows}x{b.cols}")
    entries = []
    for r in range(a.rows):
        row = a.entries[r * a.cols:(r + 1) * a.cols]
        for c in range(b.cols):
            entries.append(sum((row[k] * b[k, c] for k in range(a.cols) if row[k]), Fraction(0)))
    return RationalMatrix(a.rows, b.cols, tuple(entries))


def _integer_rows(m: RationalMatrix) -> List[List[int]]:
    """逐行乘以分母的最小公倍数，得到整数矩阵（秩不变）"""
    result = []
    for row in m.to_rows():
        scale = lcm(*(value.denominator for value in row)) if row else 1
        result.append([int(value * scale) for value in row])
    return result


def _bareiss_rank(matrix: List[List[int]]) -> int:
    """整数矩阵上的Bareiss无分数消元，原地修改并返回秩"""
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    rank = 0
    previous_pivot = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        # 主元：按列序的第一个非零元
        pivot_row = next((r for r in range(rank, n_rows) if matrix[r][col]), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for r in range(rank + 1, n_rows):
            lead = matrix[r][col]
            row_r = matrix[r]
            row_p = matrix[rank]
            for c in range(col + 1, n_cols):
                # 整除性由Sylvester恒等式保证
                row_r[c] = (pivot * row_r[c] - lead * row_p[c]) // previous_pivot
            row_r[col] = 0
        previous_pivot = pivot
        rank += 1
    return rank


def rank(m: RationalMatrix) -> int:
    """
    计算有理数上的精确秩

    Args:
        m: 有理数矩阵（允许空矩阵）

    Returns:
        秩
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    return _bareiss_rank(_integer_rows(m))


def rank_by_fractions(m: RationalMatrix) -> int:
    """朴素的有理数高斯消元求秩，用作Bareiss消元的交叉校验"""
    rows = m.to_rows()
    n_rows, n_cols = m.rows, m.cols
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        for i in range(r + 1, n_rows):
            factor = rows[i][c] / rows[r][c]
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == n_rows:
            break
    return r


def kernel_dimension(m: RationalMatrix) -> int:
    """零空间维数 = 列数 - 秩（秩-零化度定理）"""
    return m.cols - rank(m)


def compose_is_zero(a: RationalMatrix, b: RationalMatrix) -> bool:
    """
    判断 a·b 是否为零矩阵

    Raises:
        AmbientMismatchError: a.cols != b.rows
    """
    return multiply(a, b).is_zero()
