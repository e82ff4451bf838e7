"""
输入输出格式模块

单项式文本语法 `x1^2*x3`（`^` 表示幂，`*` 分隔因子），理想为逗号分隔的单项式；
二部图语境下使用 x1..xm, y1..yn 变量名。另支持结构化JSON：
{"n": 4, "generators": [[2,0,0,0],[1,1,0,0]]}
"""

import json
import re
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ValidationError, field_validator, model_validator

from .errors import ParseError
from .monomial_core import Monomial, MonomialIdeal

_FACTOR_PATTERN = re.compile(r"^([xy])(\d+)(?:\^(\d+))?$")


class IdealPayload(BaseModel):
    """理想的结构化JSON表示"""

    n: int
    generators: List[List[int]]

    @field_validator("n")
    @classmethod
    def _positive_ambient(cls, value: int) -> int:
        if value < 1:
            raise ValueError("n 必须 >= 1")
        return value

    @model_validator(mode="after")
    def _check_lengths(self) -> "IdealPayload":
        for exps in self.generators:
            if len(exps) != self.n:
                raise ValueError(f"指数向量 {exps} 长度不等于 n={self.n}")
            if any(e < 0 for e in exps):
                raise ValueError(f"指数必须非负: {exps}")
        return self


def standard_names(n: int) -> List[str]:
    """x1..xn"""
    return [f"x{i}" for i in range(1, n + 1)]


def bipartite_names(m: int, n: int) -> List[str]:
    """x1..xm, y1..yn（x变量在前）"""
    return standard_names(m) + [f"y{j}" for j in range(1, n + 1)]


def _parse_factors(token: str) -> List[Tuple[str, int, int]]:
    factors = []
    for raw in token.split("*"):
        factor = raw.strip()
        if factor == "1":
            continue
        match = _FACTOR_PATTERN.match(factor)
        if not match:
            raise ParseError(f"无法解析单项式因子: '{factor}'（期望形如 x1^2）")
        letter, index, exp = match.groups()
        if int(index) < 1:
            raise ParseError(f"变量下标必须从1开始: '{factor}'")
        factors.append((letter, int(index), int(exp) if exp else 1))
    return factors


def parse_ideal(
    text: str, names: Optional[Sequence[str]] = None, n: Optional[int] = None
) -> Tuple[MonomialIdeal, List[str]]:
    """
    解析理想文本或JSON

    Args:
        text: 逗号分隔的单项式，或JSON对象
        names: 变量名表；None时根据出现的变量推断
        n: 指定变量个数（仅 x 变量时生效，须不小于出现的最大下标）

    Returns:
        (理想, 变量名表)

    Raises:
        ParseError: 语法错误
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        ideal = ideal_from_json(stripped)
        return ideal, list(names or standard_names(ideal.ambient_n))

    tokens = [t.strip() for t in stripped.split(",")] if stripped else []
    parsed = []
    for token in tokens:
        if token in ("", "0"):
            continue
        parsed.append(_parse_factors(token))

    if names is None:
        max_x = max((i for fs in parsed for (v, i, _) in fs if v == "x"), default=0)
        max_y = max((i for fs in parsed for (v, i, _) in fs if v == "y"), default=0)
        if max_y:
            names = bipartite_names(max_x, max_y)
        else:
            ambient = max(max_x, n or 0, 1)
            if n is not None and n < max_x:
                raise ParseError(f"指定的变量个数 {n} 小于出现的最大下标 {max_x}")
            names = standard_names(ambient)
    names = list(names)
    position = {name: k for k, name in enumerate(names)}

    monomials = []
    for factors in parsed:
        exps = [0] * len(names)
        for letter, index, exp in factors:
            name = f"{letter}{index}"
            if name not in position:
                raise ParseError(f"变量 {name} 不在变量表 {names} 中")
            exps[position[name]] += exp
        monomials.append(Monomial(tuple(exps)))
    return MonomialIdeal(len(names), tuple(monomials)), names


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    """在给定变量表上解析单个单项式"""
    ideal, _ = parse_ideal(text, names=names)
    if ideal.num_generators != 1:
        raise ParseError(f"期望单个单项式: '{text}'")
    return ideal.generators[0]


def format_monomial(m: Monomial, names: Optional[Sequence[str]] = None) -> str:
    names = names or standard_names(m.n)
    factors = []
    for name, e in zip(names, m.exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def format_ideal(ideal: MonomialIdeal, names: Optional[Sequence[str]] = None) -> str:
    if ideal.is_zero():
        return "0"
    return ", ".join(format_monomial(g, names) for g in ideal.generators)


def ideal_to_json(ideal: MonomialIdeal) -> Dict[str, Any]:
    return {
        "n": ideal.ambient_n,
        "generators": [list(g.exponents) for g in ideal.generators],
    }


def ideal_from_json(text: str) -> MonomialIdeal:
    """
    解析结构化JSON理想

    Raises:
        ParseError: JSON非法或字段不符合要求
    """
    try:
        payload = IdealPayload.model_validate(json.loads(text))
    except (json.JSONDecodeError, ValidationError) as e:
        raise ParseError(f"理想JSON解析失败: {str(e)}") from e
    return MonomialIdeal.from_exponents(payload.n, payload.generators)


def parse_int_list(text: str, what: str = "分拆") -> Tuple[int, ...]:
    """解析形如 `4,4,3` 的整数列表"""
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError as e:
        raise ParseError(f"{what}必须是逗号分隔的整数: '{text}'") from e
    if not values:
        raise ParseError(f"{what}不能为空")
    return values


def canonical_json(payload: Any) -> str:
    """规范JSON：键排序，重复序列化结果稳定"""
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2)
