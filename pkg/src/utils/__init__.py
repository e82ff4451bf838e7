"""
工具模块

包含基础工具和辅助功能：
- 日志配置
"""

from .logger_config import setup_logging, get_logger

__all__ = ["setup_logging", "get_logger"]
