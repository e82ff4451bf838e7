"""
性质检验模块

随机理想上的对偶律检验，以及小规模分拆上定理的穷举验证：
- 双重对偶律（高度 >= 2）与乘积律（等次生成）
- Ferrers理想LCM对偶的准素分解
- X_lambda 支撑的胞腔分解
- 特殊纤维环关系与对称矩阵子式
"""

from datetime import datetime
from typing import Dict, Iterator, List, Optional

import numpy as np
from tqdm import tqdm

from config import Config

from ..core.errors import MonomialIdealError, VerificationError
from ..core.exactlinalg import rank
from ..core.monomial_core import (
    Monomial,
    MonomialIdeal,
    height,
    is_equigenerated,
    lcm_dual,
    product,
)
from ..resolution.cellular_complex import build_complex, face_cycle_matrix, incidence_matrix
from ..resolution.verifier import verify_resolution
from ..utils.logger_config import get_logger
from .ferrers import (
    Partition,
    alexander_dual,
    complement_edge_ideal,
    ferrers_dual_primary_decomposition,
    ferrers_graph,
    ferrers_ideal,
    intersect_all,
    is_irredundant,
    strongly_stable_from_partition,
)
from .fiber import fiber_dimension, minors_match_relations, verify_fiber_isomorphism

logger = get_logger(__name__)


def enumerate_partitions(max_rows: int, max_first: int) -> Iterator[Partition]:
    """所有行数 <= max_rows、首行 <= max_first 的分拆（按长度再按字典序）"""

    def extend(prefix: List[int], length: int) -> Iterator[List[int]]:
        if len(prefix) == length:
            yield prefix
            return
        bound = prefix[-1] if prefix else max_first
        for part in range(1, bound + 1):
            yield from extend(prefix + [part], length)

    for length in range(1, max_rows + 1):
        for parts in extend([], length):
            yield Partition(tuple(parts))


def random_ideal(rng: np.random.Generator) -> MonomialIdeal:
    """随机非零真理想：n <= 5，指数 <= 5，生成元 <= 8"""
    while True:
        n = int(rng.integers(1, Config.RANDOM_MAX_VARIABLES + 1))
        count = int(rng.integers(1, Config.RANDOM_MAX_GENERATORS + 1))
        exps = rng.integers(0, Config.RANDOM_MAX_EXPONENT + 1, size=(count, n))
        ideal = MonomialIdeal.from_exponents(n, exps.tolist())
        if not ideal.is_unit():
            return ideal


def random_equigenerated_ideal(
    rng: np.random.Generator, n: int, degree: int
) -> MonomialIdeal:
    """n 个变量上由 degree 次单项式生成的随机理想"""
    count = int(rng.integers(1, Config.RANDOM_MAX_GENERATORS + 1))
    exps = rng.multinomial(degree, [1.0 / n] * n, size=count)
    return MonomialIdeal.from_exponents(n, exps.tolist())


class PropertyChecker:
    """性质检验器：随机对偶律检验与定理穷举"""

    def __init__(self, seed: Optional[int] = None, show_progress: bool = False):
        """
        初始化检验器

        Args:
            seed: 随机种子，None时使用 Config.DEFAULT_SEED
            show_progress: 是否显示tqdm进度条
        """
        self.seed = Config.DEFAULT_SEED if seed is None else seed
        self.rng = np.random.default_rng(self.seed)
        self.show_progress = show_progress
        self.failures: List[str] = []

    def _progress(self, iterable, desc: str, total: Optional[int] = None):
        return tqdm(
            iterable,
            desc=desc,
            total=total,
            disable=not self.show_progress,
            dynamic_ncols=True,
            ascii=True,
        )

    def _fail(self, message: str) -> None:
        logger.error(message)
        self.failures.append(message)

    def check_double_dual(self, samples: Optional[int] = None) -> Dict:
        """
        双重对偶律：高度 >= 2 时 dual(dual(I)) == I；高度1时应出现反例

        Returns:
            {"samples", "height_ge_2", "height_1", "height_1_violations", "law_failures"}
        """
        samples = samples or Config.SELFTEST_SAMPLES
        counts = {"samples": samples, "height_ge_2": 0, "height_1": 0,
                  "height_1_violations": 0, "law_failures": 0}
        for _ in self._progress(range(samples), "double dual"):
            ideal = random_ideal(self.rng)
            double = lcm_dual(lcm_dual(ideal))
            if height(ideal).height >= 2:
                counts["height_ge_2"] += 1
                if double != ideal:
                    counts["law_failures"] += 1
                    self._fail(f"double dual differs at height >= 2: {ideal}")
            else:
                counts["height_1"] += 1
                if double != ideal:
                    counts["height_1_violations"] += 1
        if counts["height_1_violations"] == 0:
            self._fail("no sampled height-1 ideal violates the double-dual law")
        logger.info(f"双重对偶律: {counts}")
        return counts

    def check_product_law(self, samples: Optional[int] = None) -> Dict:
        """乘积律：等次生成的 I, J 满足 dual(IJ) == dual(I)·dual(J)，且 IJ 次数为 deg I + deg J"""
        samples = samples or Config.SELFTEST_PRODUCT_SAMPLES
        failures = 0
        for _ in self._progress(range(samples), "product law"):
            n = int(self.rng.integers(1, Config.RANDOM_MAX_VARIABLES + 1))
            d_i, d_j = (int(d) for d in self.rng.integers(1, Config.RANDOM_MAX_EXPONENT + 1, size=2))
            i_ideal = random_equigenerated_ideal(self.rng, n, d_i)
            j_ideal = random_equigenerated_ideal(self.rng, n, d_j)
            ij = product(i_ideal, j_ideal)
            if is_equigenerated(ij) != d_i + d_j:
                failures += 1
                self._fail(f"product degree is not {d_i + d_j}: {ij}")
            elif lcm_dual(ij) != product(lcm_dual(i_ideal), lcm_dual(j_ideal)):
                failures += 1
                self._fail(f"product law fails: I={i_ideal}, J={j_ideal}")
        logger.info(f"乘积律: {samples} 对, {failures} 个失败")
        return {"samples": samples, "failures": failures}

    def sweep_decompositions(
        self,
        max_rows: int = Config.DECOMPOSITION_MAX_ROWS,
        max_columns: int = Config.DECOMPOSITION_MAX_COLUMNS,
    ) -> Dict:
        """闭式分解、分量之交、lcm_dual(I_lambda)、补图的Alexander对偶四者相等"""
        partitions = list(enumerate_partitions(max_rows, max_columns))
        failures = 0
        for lam in self._progress(partitions, "decompositions"):
            ideal = ferrers_ideal(lam)
            components = ferrers_dual_primary_decomposition(lam)
            intersection = intersect_all(components, ideal.ambient_n)
            dual = lcm_dual(ideal)
            alexander = alexander_dual(complement_edge_ideal(ferrers_graph(lam)))
            if not is_irredundant(components) or not (intersection == dual == alexander):
                failures += 1
                self._fail(f"primary decomposition mismatch at lambda={lam}")
        logger.info(f"准素分解: {len(partitions)} 个分拆, {failures} 个失败")
        return {"partitions": len(partitions), "failures": failures}

    def sweep_resolutions(
        self,
        max_rows: int = Config.RESOLUTION_MAX_ROWS,
        max_first: int = Config.RESOLUTION_MAX_FIRST_PART,
        use_oracle: bool = True,
    ) -> Dict:
        """所有强稳定形状的 lambda 上验证胞腔分解与矩阵秩"""
        partitions = [
            lam for lam in enumerate_partitions(max_rows, max_first)
            if lam.is_strongly_stable_shape()
        ]
        failures = 0
        for lam in self._progress(partitions, "resolutions"):
            try:
                summary = verify_resolution(lam, use_oracle=use_oracle)
                complex_ = build_complex(lam)
                nu, eps = complex_.num_vertices, complex_.num_edges
                if rank(incidence_matrix(complex_)) != nu - 1:
                    raise VerificationError("incidence_rank", {"lambda": str(lam)})
                if rank(face_cycle_matrix(complex_)) != eps - nu + 1:
                    raise VerificationError("face_cycle_rank", {"lambda": str(lam)})
                if not summary.is_linear:
                    raise VerificationError("linearity", {"lambda": str(lam)})
                if lam.m > 1 and summary.betti[2] and summary.projective_dimension != 3:
                    raise VerificationError("projective_dimension", {"lambda": str(lam)})
            except MonomialIdealError as e:
                failures += 1
                self._fail(f"resolution check failed at lambda={lam}: {str(e)}")
        logger.info(f"胞腔分解: {len(partitions)} 个分拆, {failures} 个失败")
        return {"partitions": len(partitions), "failures": failures}

    def sweep_fibers(
        self,
        max_rows: int = Config.FIBER_MAX_ROWS,
        max_first: int = Config.FIBER_MAX_FIRST_PART,
        r_max: int = Config.DEFAULT_RMAX,
    ) -> Dict:
        """强稳定 lambda 上验证纤维环关系、维数与子式表示（m = 1 时高度为1，不满足定理假设，跳过）"""
        partitions = [
            lam for lam in enumerate_partitions(max_rows, max_first)
            if lam.is_strongly_stable_shape() and lam.m >= 2
        ]
        failures = 0
        for lam in self._progress(partitions, "fibers"):
            ideal = strongly_stable_from_partition(lam)
            try:
                matched = verify_fiber_isomorphism(ideal, r_max)
                dims = (fiber_dimension(ideal), fiber_dimension(lcm_dual(ideal)))
                minors = minors_match_relations(lam)
            except MonomialIdealError as e:
                failures += 1
                self._fail(f"fiber check failed at lambda={lam}: {str(e)}")
                continue
            if not matched or dims != (lam.n, lam.n) or not all(minors.values()):
                failures += 1
                self._fail(f"fiber mismatch at lambda={lam}: dims={dims}, minors={minors}")
        logger.info(f"特殊纤维环: {len(partitions)} 个分拆, {failures} 个失败")
        return {"partitions": len(partitions), "failures": failures}

    def run_selftest(
        self, samples: Optional[int] = None, product_samples: Optional[int] = None
    ) -> Dict:
        """
        运行全部检验

        Returns:
            报告字典，passed 为全部检验是否通过
        """
        logger.info(f"开始自检, seed={self.seed}")
        self.failures = []
        report = {
            "seed": self.seed,
            "start_time": datetime.now().isoformat(),
            "double_dual": self.check_double_dual(samples),
            "product_law": self.check_product_law(product_samples),
            "decompositions": self.sweep_decompositions(),
            "resolutions": self.sweep_resolutions(),
            "fibers": self.sweep_fibers(),
        }
        report["end_time"] = datetime.now().isoformat()
        report["failures"] = list(self.failures)
        report["passed"] = not self.failures
        return report


def worked_examples() -> Dict[str, bool]:
    """固定的手算例子"""
    ideal = MonomialIdeal.from_exponents(2, [(3, 0), (2, 2), (0, 4)])
    expected = MonomialIdeal.from_exponents(2, [(3, 0), (1, 2), (0, 4)])
    height_one = MonomialIdeal.from_exponents(3, [(2, 0, 0), (1, 1, 0), (1, 0, 1)])
    witness_ideal = MonomialIdeal.from_exponents(2, [(3, 0), (1, 1), (0, 2)])
    dual_square = product(lcm_dual(witness_ideal), lcm_dual(witness_ideal))
    square_dual = lcm_dual(product(witness_ideal, witness_ideal))
    witness = Monomial((3, 2))
    return {
        "dual_of_three_generator_ideal": lcm_dual(ideal) == expected,
        "height_one_double_dual": lcm_dual(lcm_dual(height_one))
        == MonomialIdeal.prime(3, (0, 1, 2)),
        "non_equigenerated_product_witness": witness in dual_square
        and witness not in square_dual
        and all(g in dual_square for g in square_dual.generators),
    }
