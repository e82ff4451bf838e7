"""
胞腔分解模块

- 带标号复形 X_lambda 与显式微分
- 正合性、极小性验证与封闭公式
- 独立的多重分次Betti数验证器
"""

from .betti_oracle import graded_betti, multigraded_betti_oracle, total_betti
from .cellular_complex import (
    CellularFreeComplex,
    LabeledComplex,
    boundary_maps,
    build_complex,
    differentials_to_json,
    face_cycle_matrix,
    incidence_matrix,
    is_acyclic,
    reduced_homology_ranks,
    restrict_complex,
    to_dot,
)
from .verifier import ResolutionSummary, betti_formulas, betti_identities, betti_table, verify_resolution

__all__ = [
    "CellularFreeComplex",
    "LabeledComplex",
    "ResolutionSummary",
    "betti_formulas",
    "betti_identities",
    "betti_table",
    "boundary_maps",
    "build_complex",
    "differentials_to_json",
    "face_cycle_matrix",
    "graded_betti",
    "incidence_matrix",
    "is_acyclic",
    "multigraded_betti_oracle",
    "reduced_homology_ranks",
    "restrict_complex",
    "to_dot",
    "total_betti",
    "verify_resolution",
]
