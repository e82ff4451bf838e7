"""
日志配置模块

统一配置所有模块的日志输出；控制台只输出警告以上级别，保证命令行的标准输出可被机器解析。
"""

import logging
from pathlib import Path
from datetime import datetime
from typing import Optional

from config import Config

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

_configured = False


def setup_logging(log_dir: Optional[str] = None, level: Optional[str] = None) -> Optional[Path]:
    """
    设置统一的日志配置

    Args:
        log_dir: 日志目录，None时使用Config.LOG_DIR
        level: 文件日志级别，None时使用Config.LOG_LEVEL

    Returns:
        日志文件路径（未启用文件日志时返回None）
    """
    global _configured

    if _configured:
        return None

    root = logging.getLogger()
    formatter = logging.Formatter(LOG_FORMAT)
    log_file_path = None

    root.setLevel(logging.DEBUG)

    # 控制台处理器 - 输出到stderr
    console_handler = logging.StreamHandler()
    console_handler.setLevel(Config.CONSOLE_LOG_LEVEL.upper())
    console_handler.setFormatter(formatter)
    root.addHandler(console_handler)

    if Config.LOG_TO_FILE:
        # 生成日志文件名（按日期）
        logs_dir = Path(log_dir or Config.LOG_DIR)
        logs_dir.mkdir(parents=True, exist_ok=True)
        log_file_path = logs_dir / f"monomideal_{datetime.now().strftime('%Y%m%d')}.log"

        # 文件处理器 - 输出到日志文件
        file_handler = logging.FileHandler(log_file_path, encoding="utf-8")
        file_handler.setLevel((level or Config.LOG_LEVEL).upper())
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)

    # 设置第三方库的日志级别
    logging.getLogger("pydot").setLevel(logging.WARNING)

    _configured = True
    return log_file_path


def get_logger(name: str) -> logging.Logger:
    """获取指定名称的日志器"""
    return logging.getLogger(name)
