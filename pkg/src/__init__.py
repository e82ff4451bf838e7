"""
单项式理想LCM对偶计算与验证系统

精确算术实现单项式理想的LCM对偶、Ferrers理想的准素分解、强稳定理想的特化、
特殊纤维环的环面关系，以及强稳定二次理想LCM对偶的胞腔极小自由分解，并附带独立的暴力验证器。
"""

__version__ = "1.0.0"

__all__ = ["analysis", "core", "resolution", "utils"]
