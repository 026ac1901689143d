"""Event logging for polyconn.

Each component logs through a ``LoggerWrapper`` named ``polyconn.<component>``.
Messages are dropped unless the caller passes ``verbose=True``. Context travels as
sorted ``key=value`` pairs, or as one JSON object per line when ``POLYCONN_LOG_JSON``
is set; exact rationals are written as ``p/q`` strings in both modes.
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from typing import Any

from polyconn.config import get_settings

_FORMAT = "%(levelname)s - %(name)s: %(message)s"


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    return value


def _text(value: Any) -> str:
    value = _plain(value)
    if isinstance(value, (str, int)) or value is None:
        return str(value)
    return repr(value)


class LoggerWrapper:
    def __init__(self, component: str) -> None:
        self._logger = logging.getLogger(f"polyconn.{component}")
        self._logger.propagate = False
        if not self._logger.handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter(_FORMAT))
            self._logger.addHandler(handler)
            self._logger.setLevel(logging.INFO)

    def log(
        self, message: str, level: str = "info", verbose: bool = False, **context: Any
    ) -> None:
        """Log ``message`` with its context at ``level``; a no-op unless ``verbose``."""
        if not verbose:
            return
        getattr(self._logger, level.lower())(self._render(message, context))

    def log_event(
        self, event: str, level: str = "info", verbose: bool = False, **context: Any
    ) -> None:
        self.log(event, level=level, verbose=verbose, event=event, **context)

    def _render(self, message: str, context: dict[str, Any]) -> str:
        if not context:
            return message
        if get_settings().log_json:
            payload = {"message": message, "logger": self._logger.name}
            payload.update((key, _plain(value)) for key, value in context.items())
            return json.dumps(payload, default=str)
        pairs = " ".join(f"{key}={_text(context[key])}" for key in sorted(context))
        return f"{message} | {pairs}"
