import os
import platform
import psutil
import time
from functools import wraps
from typing import Callable, Dict
import logging

logger = logging.getLogger(__name__)

class Stopwatch:
    """Accumulating wall-clock timer for repeated solver calls"""

    def __init__(self):
        self.total_seconds = 0.0
        self._started = None

    def __enter__(self) -> "Stopwatch":
        self._started = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.total_seconds += time.perf_counter() - self._started
        self._started = None
        return False

    @property
    def total_ms(self) -> float:
        return self.total_seconds * 1000.0

def measure_time(func_name: str = None):
    """Decorator to log function execution time"""
    def decorator(func: Callable) -> Callable:
        name = func_name or func.__name__

        @wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            result = func(*args, **kwargs)
            execution_time = time.perf_counter() - start_time

            logger.info(f"⏱️ {name} executed in {execution_time:.4f}s")
            return result

        return wrapper

    return decorator

def machine_info() -> Dict:
    """Host description attached to benchmark reports"""
    try:
        memory = psutil.virtual_memory()
        return {
            "python": platform.python_version(),
            "platform": platform.platform(),
            "cpu_count": psutil.cpu_count(logical=True) or os.cpu_count(),
            "memory_total_mb": memory.total // (1024 * 1024),
        }
    except Exception as e:
        logger.error(f"Failed to read machine info: {str(e)}")
        return {"python": platform.python_version()}
