"""
带标号多面体复形模块

构造强稳定二次理想 I 对应的网格复形 X_lambda：
- 顶点 v_{i,j}（x_i·x_j ∈ I, i <= j），标号 m_I/(x_i x_j)
- 边 e_{(i,j),(i,j+1)}（水平）与 e_{(i,j),(i+1,j)}（竖直），方向由顶点顺序给出
- 面 s_{(i,j),(i+1,j),(i+1,j+1),(i,j+1)}，标号 m_I

排序约定（与 lambda=(4,4,3) 的示例矩阵逐元素一致）：
顶点按 (i,j) 行优先字典序；边按行展开：第 i 行的水平边从左到右，
接着第 i 行到第 i+1 行的竖直边从左到右；面按行优先。
面的边界沿 (i,j)->(i,j+1)->(i+1,j+1)->(i+1,j)->(i,j) 走向定向。
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import sympy

from ..analysis.ferrers import Partition, strongly_stable_from_partition
from ..core.errors import VerificationError
from ..core.exactlinalg import RationalMatrix, compose_is_zero, rank
from ..core.io_formats import format_monomial
from ..core.monomial_core import Monomial, lcm_of_ideal
from ..utils.logger_config import get_logger

logger = get_logger(__name__)

Position = Tuple[int, int]

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


@dataclass(frozen=True)
class Vertex:
    position: Position
    label: Monomial


@dataclass(frozen=True)
class Edge:
    """有向边 tail -> head（tail 为负端，head 为正端）"""

    tail: Position
    head: Position
    label: Monomial
    kind: str = ""


@dataclass(frozen=True)
class Face:
    """定向面：boundary 为边界环的顶点走向"""

    boundary: Tuple[Position, ...]
    label: Monomial

    @property
    def corners(self) -> Tuple[Position, ...]:
        """记号 s_{(i,j),(i+1,j),(i+1,j+1),(i,j+1)} 中的顶点顺序"""
        return (self.boundary[0],) + tuple(reversed(self.boundary[1:]))


@dataclass(frozen=True)
class LabeledComplex:
    """带单项式标号的二维胞腔复形"""

    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    faces: Tuple[Face, ...]
    lcm: Monomial
    lam: Optional[Partition] = None

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def is_void(self) -> bool:
        return not (self.vertices or self.edges or self.faces)

    def vertex_index(self) -> Dict[Position, int]:
        return {v.position: k for k, v in enumerate(self.vertices)}

    def edge_index(self) -> Dict[Tuple[Position, Position], int]:
        return {(e.tail, e.head): k for k, e in enumerate(self.edges)}

    def face_edges(self, face: Face) -> List[Tuple[int, int]]:
        """面边界上的 (边下标, 方向符号)；沿走向与边同向为 +1"""
        edges = self.edge_index()
        result = []
        cycle = face.boundary
        for u, v in zip(cycle, cycle[1:] + cycle[:1]):
            if (u, v) in edges:
                result.append((edges[(u, v)], 1))
            elif (v, u) in edges:
                result.append((edges[(v, u)], -1))
            else:
                raise VerificationError("closure", {"face": face.boundary, "missing": (u, v)})
        return result

    def check_closure(self) -> None:
        """边的两端点与面的四条边界边都在复形中"""
        positions = set(self.vertex_index())
        for e in self.edges:
            if e.tail not in positions or e.head not in positions:
                raise VerificationError("closure", {"edge": (e.tail, e.head)})
        for f in self.faces:
            self.face_edges(f)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for v in self.vertices:
            graph.add_node(v.position, label=v.label)
        for e in self.edges:
            graph.add_edge(e.tail, e.head, label=e.label, kind=e.kind)
        return graph

    def num_components(self) -> int:
        if not self.vertices:
            return 0
        return nx.number_connected_components(self.to_networkx().to_undirected())


@dataclass(frozen=True)
class MonomialEntry:
    """微分矩阵的元素 sign·monomial"""

    sign: int
    monomial: Monomial

    @property
    def variable_index(self) -> Optional[int]:
        """一次单项式对应的变量下标（从1开始）"""
        support = self.monomial.support
        if self.monomial.degree == 1:
            return support[0] + 1
        return None

    def __str__(self) -> str:
        text = format_monomial(self.monomial)
        return text if self.sign > 0 else f"-{text}"


EntryMatrix = Tuple[Tuple[Optional[MonomialEntry], ...], ...]


@dataclass(frozen=True)
class CellularFreeComplex:
    """X 上支撑的胞腔自由复形 0 <- R <- R^nu <- R^eps <- R^f <- 0"""

    betti: Tuple[int, int, int]
    shifts: Tuple[int, int, int]
    d0: Tuple[Monomial, ...]
    d1: EntryMatrix
    d2: EntryMatrix
    ambient_n: int = field(default=0)


def _lcm_all(labels: Sequence[Monomial]) -> Monomial:
    result = labels[0]
    for label in labels[1:]:
        result = result.lcm(label)
    return result


def build_complex(lam: Partition) -> LabeledComplex:
    """
    构造 X_lambda

    Args:
        lam: 满足 lambda_m > m-1 的分拆

    Returns:
        LabeledComplex；边与面的标号取顶点标号的lcm
    """
    ideal = strongly_stable_from_partition(lam)
    m_i = lcm_of_ideal(ideal)
    n = ideal.ambient_n

    rows = {i: list(range(i, lam.parts[i - 1] + 1)) for i in range(1, lam.m + 1)}
    present = {(i, j) for i, cols in rows.items() for j in cols}

    def vertex_label(i: int, j: int) -> Monomial:
        return m_i / (Monomial.variable(n, i - 1) * Monomial.variable(n, j - 1))

    labels = {p: vertex_label(*p) for p in present}
    vertices = tuple(Vertex(p, labels[p]) for p in sorted(present))

    edges: List[Edge] = []
    for i in range(1, lam.m + 1):
        for j in rows[i][:-1]:
            tail, head = (i, j), (i, j + 1)
            edges.append(Edge(tail, head, labels[tail].lcm(labels[head]), HORIZONTAL))
        for j in rows[i]:
            tail, head = (i, j), (i + 1, j)
            if head in present:
                edges.append(Edge(tail, head, labels[tail].lcm(labels[head]), VERTICAL))

    faces: List[Face] = []
    for i in range(1, lam.m):
        for j in rows[i]:
            cycle = ((i, j), (i, j + 1), (i + 1, j + 1), (i + 1, j))
            if all(p in present for p in cycle):
                faces.append(Face(cycle, _lcm_all([labels[p] for p in cycle])))

    complex_ = LabeledComplex(vertices, tuple(edges), tuple(faces), m_i, lam)
    complex_.check_closure()
    logger.debug(
        f"X_lambda lambda={lam}: {len(vertices)} 顶点, {len(edges)} 边, {len(faces)} 面"
    )
    return complex_


def incidence_matrix(complex_: LabeledComplex) -> RationalMatrix:
    """关联矩阵 A(G)：nu x eps，负端 +1，正端 -1"""
    index = complex_.vertex_index()
    rows = [[0] * complex_.num_edges for _ in range(complex_.num_vertices)]
    for k, e in enumerate(complex_.edges):
        rows[index[e.tail]][k] = 1
        rows[index[e.head]][k] = -1
    return RationalMatrix.from_rows(rows, cols=complex_.num_edges)


def face_cycle_matrix(complex_: LabeledComplex) -> RationalMatrix:
    """面环矩阵 C_f：eps x f，边方向与面定向一致为 +1，相反为 -1"""
    rows = [[0] * complex_.num_faces for _ in range(complex_.num_edges)]
    for k, face in enumerate(complex_.faces):
        for edge, sign in complex_.face_edges(face):
            rows[edge][k] = sign
    return RationalMatrix.from_rows(rows, cols=complex_.num_faces)


def _var(n: int, k: int) -> Monomial:
    """x_k（k 从1开始）"""
    return Monomial.variable(n, k - 1)


def boundary_maps(complex_: LabeledComplex) -> CellularFreeComplex:
    """
    按显式公式构造微分：
        d1(e_{(i,j),(i+1,j)}) = x_i v_{i,j} - x_{i+1} v_{i+1,j}
        d1(e_{(i,j),(i,j+1)}) = x_j v_{i,j} - x_{j+1} v_{i,j+1}
        d2(s) = x_i e_{(i,j),(i,j+1)} + x_{j+1} e_{(i,j+1),(i+1,j+1)}
                - x_{i+1} e_{(i+1,j),(i+1,j+1)} - x_j e_{(i,j),(i+1,j)}
        d0(v_{i,j}) = m_I/(x_i x_j)

    Raises:
        VerificationError: d1·d2 != 0（符号验证或素数代入验证）
    """
    n = complex_.lcm.n
    v_index = complex_.vertex_index()
    e_index = complex_.edge_index()

    d1 = [[None] * complex_.num_edges for _ in range(complex_.num_vertices)]
    for k, e in enumerate(complex_.edges):
        (i, j), head = e.tail, e.head
        if head == (i + 1, j):
            tail_var, head_var = i, i + 1
        elif head == (i, j + 1):
            tail_var, head_var = j, j + 1
        else:
            raise VerificationError("edge_shape", {"edge": (e.tail, e.head)})
        d1[v_index[e.tail]][k] = MonomialEntry(1, _var(n, tail_var))
        d1[v_index[head]][k] = MonomialEntry(-1, _var(n, head_var))

    d2 = [[None] * complex_.num_faces for _ in range(complex_.num_edges)]
    for k, face in enumerate(complex_.faces):
        i, j = face.boundary[0]
        terms = [
            (((i, j), (i, j + 1)), 1, i),
            (((i, j + 1), (i + 1, j + 1)), 1, j + 1),
            (((i + 1, j), (i + 1, j + 1)), -1, i + 1),
            (((i, j), (i + 1, j)), -1, j),
        ]
        for key, sign, var in terms:
            d2[e_index[key]][k] = MonomialEntry(sign, _var(n, var))

    free_complex = CellularFreeComplex(
        betti=(complex_.num_vertices, complex_.num_edges, complex_.num_faces),
        shifts=(complex_.lcm.degree - 2, complex_.lcm.degree - 1, complex_.lcm.degree),
        d0=tuple(v.label for v in complex_.vertices),
        d1=tuple(tuple(row) for row in d1),
        d2=tuple(tuple(row) for row in d2),
        ambient_n=n,
    )
    if not product_is_zero_symbolic(free_complex.d1, free_complex.d2):
        raise VerificationError("complex_condition", "d1·d2 != 0（符号计算）")
    if not product_is_zero_numeric(free_complex.d1, free_complex.d2, n):
        raise VerificationError("complex_condition", "d1·d2 != 0（素数代入）")
    return free_complex


def product_is_zero_symbolic(a: EntryMatrix, b: EntryMatrix) -> bool:
    """单项式元素矩阵乘积逐项合并后是否为零"""
    inner = len(b)
    cols = len(b[0]) if b else 0
    for row in a:
        for c in range(cols):
            terms: Counter = Counter()
            for k in range(inner):
                x, y = row[k], b[k][c]
                if x is not None and y is not None:
                    terms[x.monomial * y.monomial] += x.sign * y.sign
            if any(terms.values()):
                return False
    return True


def substitute(entries: EntryMatrix, values: Sequence[int], cols: int) -> RationalMatrix:
    """将变量 x_k 代入整数 values[k-1]，得到有理数矩阵"""
    rows = []
    for row in entries:
        numeric = []
        for entry in row:
            if entry is None:
                numeric.append(0)
                continue
            value = entry.sign
            for k, e in enumerate(entry.monomial.exponents):
                value *= values[k] ** e
            numeric.append(value)
        rows.append(numeric)
    return RationalMatrix.from_rows(rows, cols=cols)


def prime_substitution(n: int) -> List[int]:
    """x_k -> 第 k 个素数（2, 3, 5, 7, ...）"""
    return [int(sympy.prime(k)) for k in range(1, n + 1)]


def product_is_zero_numeric(a: EntryMatrix, b: EntryMatrix, n: int) -> bool:
    """以互异素数代入变量后验证 a·b = 0"""
    values = prime_substitution(n)
    inner = len(b)
    cols = len(b[0]) if b else 0
    return compose_is_zero(substitute(a, values, inner), substitute(b, values, cols))


def sign_pattern(entries: EntryMatrix, cols: int) -> RationalMatrix:
    """忽略单项式，只保留 -1/0/+1 符号"""
    return RationalMatrix.from_rows(
        [[entry.sign if entry else 0 for entry in row] for row in entries], cols=cols
    )


def restrict_complex(complex_: LabeledComplex, b: Monomial) -> LabeledComplex:
    """子复形 X_{<=b}：标号整除 b 的全部胞腔"""
    sub = LabeledComplex(
        vertices=tuple(v for v in complex_.vertices if v.label.divides(b)),
        edges=tuple(e for e in complex_.edges if e.label.divides(b)),
        faces=tuple(f for f in complex_.faces if f.label.divides(b)),
        lcm=complex_.lcm,
        lam=complex_.lam,
    )
    sub.check_closure()
    return sub


def reduced_homology_ranks(complex_: LabeledComplex) -> Tuple[int, int, int, int]:
    """
    增广链复形 0 <- K <- K^nu <- K^eps <- K^f <- 0 的约化同调秩

    Returns:
        (H_{-1}, H_0, H_1, H_2) 的维数

    Raises:
        VerificationError: 增广链复形的微分复合不为零
    """
    nu, eps, f = complex_.num_vertices, complex_.num_edges, complex_.num_faces
    augmentation = RationalMatrix.from_rows([[1] * nu], cols=nu)
    a = incidence_matrix(complex_)
    c = face_cycle_matrix(complex_)
    if not compose_is_zero(augmentation, a) or not compose_is_zero(a, c):
        raise VerificationError("chain_complex", "增广链复形微分复合不为零")
    r0, r1, r2 = rank(augmentation), rank(a), rank(c)
    return (1 - r0, nu - r0 - r1, eps - r1 - r2, f - r2)


def is_acyclic(complex_: LabeledComplex) -> bool:
    """
    在有理数上约化同调全部为零

    无任何胞腔的子复形视为无圈（对应不在理想中的多重次数）。
    """
    if complex_.is_void():
        return True
    return not any(reduced_homology_ranks(complex_))


def _dot_id(position: Position) -> str:
    return f"v_{position[0]}_{position[1]}"


def to_dot(complex_: LabeledComplex) -> str:
    """导出有向图 G_lambda 的DOT文本，顶点标注 (i,j) 与单项式标号"""
    graph = nx.DiGraph()
    for v in complex_.vertices:
        i, j = v.position
        graph.add_node(_dot_id(v.position), label=f"({i},{j}) {format_monomial(v.label)}")
    for e in complex_.edges:
        graph.add_edge(
            _dot_id(e.tail), _dot_id(e.head), label=format_monomial(e.label)
        )
    return nx.nx_pydot.to_pydot(graph).to_string()


def _matrix_to_json(entries: EntryMatrix, rows: int, cols: int) -> dict:
    return {
        "rows": rows,
        "cols": cols,
        "entries": [
            [r, c, entry.sign, entry.variable_index]
            for r, row in enumerate(entries)
            for c, entry in enumerate(row)
            if entry is not None
        ],
    }


def differentials_to_json(free_complex: CellularFreeComplex) -> dict:
    """微分矩阵JSON：{rows, cols, entries: [(r, c, sign, variable_index)]}，r/c 从0开始，变量从1开始"""
    nu, eps, f = free_complex.betti
    return {
        "d0": [format_monomial(m) for m in free_complex.d0],
        "d1": _matrix_to_json(free_complex.d1, nu, eps),
        "d2": _matrix_to_json(free_complex.d2, eps, f),
    }
