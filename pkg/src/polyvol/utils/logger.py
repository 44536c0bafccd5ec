"""
日志模块
计算结果只写 stdout，所有日志走 stderr 或日志文件
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional, Union

LEVEL_NAMES = ('DEBUG', 'INFO', 'WARNING', 'ERROR')

CONSOLE_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
FILE_FORMAT = '%(asctime)s [%(levelname)s] %(name)s (%(filename)s:%(lineno)d): %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

LOG_FILE_MAX_BYTES = 5 * 1024 * 1024
LOG_FILE_BACKUPS = 3


def parse_level(level: Union[int, str]) -> int:
    """'info' / 'INFO' / logging.INFO 统一转为整数级别"""
    if isinstance(level, int):
        return level
    name = level.upper()
    if name not in LEVEL_NAMES:
        raise ValueError(f"未知日志级别: {level}（可选 {', '.join(LEVEL_NAMES)}）")
    return getattr(logging, name)


class LoggerManager:
    """
    进程内唯一的日志管理器

    处理器按用途登记在 handlers 中（'console' / 'file'），
    所有经 get_logger 取得的日志器共享这些处理器，不向根日志器传播。
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            instance = super().__new__(cls)
            instance.handlers = {}
            instance.loggers = {}
            instance.level = logging.WARNING
            cls._instance = instance
        return cls._instance

    def setup(self, level: Union[int, str] = logging.WARNING, console: bool = True,
              log_path: Optional[str] = None) -> None:
        """
        配置处理器与级别，可重复调用

        Args:
            level: 日志级别
            console: 是否输出到 stderr
            log_path: 日志文件路径，None 表示不写文件
        """
        if console and 'console' not in self.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter(CONSOLE_FORMAT, DATE_FORMAT))
            self._register('console', handler)

        if log_path and 'file' not in self.handlers:
            directory = os.path.dirname(log_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            handler = RotatingFileHandler(log_path, maxBytes=LOG_FILE_MAX_BYTES,
                                          backupCount=LOG_FILE_BACKUPS, encoding='utf-8')
            handler.setFormatter(logging.Formatter(FILE_FORMAT, DATE_FORMAT))
            self._register('file', handler)

        self.set_level(level)

    def _register(self, key: str, handler: logging.Handler) -> None:
        handler.setLevel(self.level)
        self.handlers[key] = handler
        for logger in self.loggers.values():
            logger.addHandler(handler)

    def get_logger(self, name: str) -> logging.Logger:
        """按模块名取日志器；setup 之前取得的日志器在 setup 后同样生效"""
        logger = self.loggers.get(name)
        if logger is None:
            logger = logging.getLogger(name)
            logger.propagate = False
            logger.setLevel(self.level)
            for handler in self.handlers.values():
                if handler not in logger.handlers:
                    logger.addHandler(handler)
            self.loggers[name] = logger
        return logger

    def set_level(self, level: Union[int, str]) -> None:
        self.level = parse_level(level)
        for logger in self.loggers.values():
            logger.setLevel(self.level)
        for handler in self.handlers.values():
            handler.setLevel(self.level)

    def shutdown(self) -> None:
        """摘下并关闭全部处理器（测试之间复位用）"""
        for handler in self.handlers.values():
            for logger in self.loggers.values():
                logger.removeHandler(handler)
            handler.close()
        self.handlers.clear()


logger_manager = LoggerManager()


def setup_logging(
    log_dir: str = 'logs',
    log_file: str = 'polyvol.log',
    level: Union[int, str] = logging.WARNING,
    console: bool = True,
    file: bool = False
) -> None:
    """命令行入口使用的初始化函数；file=True 时写 log_dir/log_file"""
    log_path = os.path.join(log_dir, log_file) if file else None
    logger_manager.setup(level=level, console=console, log_path=log_path)


def get_logger(name: str) -> logging.Logger:
    return logger_manager.get_logger(name)
