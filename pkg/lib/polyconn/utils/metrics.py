"""Timings and counts of battery runs.

Metrics are JSON lines on the ``polyconn.metrics`` logger (standard error), emitted
only while ``POLYCONN_METRICS`` is on, so command output never carries them.
"""

from __future__ import annotations

import json
import logging
import threading
import time
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Literal

from polyconn.config import get_settings

MetricKind = Literal["counter", "observation"]


def _metrics_logger() -> logging.Logger:
    logger = logging.getLogger("polyconn.metrics")
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
        logger.setLevel(logging.INFO)
    return logger


@dataclass
class Stopwatch:
    seconds: float = 0.0


class MetricsCollector:
    """Emits metric records while enabled.

    ``enabled`` pins the switch; left as None it follows the ``metrics`` setting at
    emission time.
    """

    def __init__(self, enabled: bool | None = None) -> None:
        self._enabled = enabled
        self._lock = threading.Lock()
        self._logger = _metrics_logger()

    @property
    def enabled(self) -> bool:
        return get_settings().metrics if self._enabled is None else self._enabled

    def _emit(self, kind: MetricKind, name: str, value: float, labels: dict[str, Any]) -> None:
        if not self.enabled:
            return
        record = json.dumps(
            {
                "metric": name,
                "type": kind,
                "value": value,
                "labels": labels,
                "timestamp": time.time(),
            },
            default=str,
        )
        with self._lock:
            self._logger.info(record)

    def counter(self, name: str, value: int = 1, **labels: Any) -> None:
        self._emit("counter", name, value, labels)

    def observe(self, name: str, value: float, **labels: Any) -> None:
        self._emit("observation", name, value, labels)

    @contextmanager
    def timer(self, name: str, **labels: Any) -> Iterator[Stopwatch]:
        """Time the block; the elapsed seconds are observed and left on the stopwatch."""
        watch = Stopwatch()
        start = time.perf_counter()
        try:
            yield watch
        finally:
            watch.seconds = time.perf_counter() - start
            self.observe(name, watch.seconds, **labels)


metrics = MetricsCollector()


__all__ = ["MetricsCollector", "Stopwatch", "metrics"]
