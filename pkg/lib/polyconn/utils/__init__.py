from .import_optional import import_pandas
from .logger import LoggerWrapper
from .metrics import MetricsCollector, Stopwatch, metrics

__all__ = ["LoggerWrapper", "MetricsCollector", "Stopwatch", "import_pandas", "metrics"]
