from __future__ import annotations

import json
import logging
from collections.abc import Callable
from fractions import Fraction

import pytest

from polyconn.utils.logger import LoggerWrapper
from polyconn.utils.metrics import MetricsCollector

SetEnv = Callable[[str, str], None]


class CaptureHandler(logging.Handler):
    def __init__(self) -> None:
        super().__init__()
        self.messages: list[str] = []

    def emit(self, record: logging.LogRecord) -> None:
        self.messages.append(record.getMessage())


def capture(logger: LoggerWrapper) -> CaptureHandler:
    handler = CaptureHandler()
    logger._logger.handlers = [handler]
    logger._logger.setLevel(logging.INFO)
    return handler


def test_logger_wrapper_structured_logging(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("POLYCONN_LOG_JSON", raising=False)
    logger = LoggerWrapper("structured")
    handler = capture(logger)

    logger.log("battery complete", verbose=True, battery="k-duality", failures=0)

    output = handler.messages[-1]
    assert output.startswith("battery complete | ")
    assert "battery=k-duality" in output
    assert "failures=0" in output


def test_logger_wrapper_is_quiet_unless_verbose(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("POLYCONN_LOG_JSON", raising=False)
    logger = LoggerWrapper("quiet")
    handler = capture(logger)

    logger.log_event("identities_complete", checked=12)
    assert handler.messages == []

    logger.log_event("identities_complete", verbose=True, checked=12)
    assert handler.messages == ["identities_complete | checked=12 event=identities_complete"]


def test_logger_wrapper_json_mode(set_env: SetEnv) -> None:
    set_env("POLYCONN_LOG_JSON", "1")
    logger = LoggerWrapper("json")
    handler = capture(logger)

    logger.log_event("precondition_bypassed", level="warning", verbose=True, value=Fraction(3, 2))

    payload = json.loads(handler.messages[-1])
    assert payload["message"] == "precondition_bypassed"
    assert payload["event"] == "precondition_bypassed"
    assert payload["logger"] == "polyconn.json"
    assert payload["value"] == "3/2"


def test_metrics_collector_emits_when_enabled(
    caplog: pytest.LogCaptureFixture, set_env: SetEnv
) -> None:
    set_env("POLYCONN_METRICS", "1")
    collector = MetricsCollector()

    with caplog.at_level(logging.INFO, logger="polyconn.metrics"):
        collector.counter("battery_instances", 5, battery="io-round-trip")
        with collector.timer("battery_seconds", battery="io-round-trip"):
            pass

    counter_record = next(
        rec for rec in caplog.records if '"metric": "battery_instances"' in rec.message
    )
    counter_payload = json.loads(counter_record.message)
    assert counter_payload["type"] == "counter"
    assert counter_payload["value"] == 5
    assert counter_payload["labels"]["battery"] == "io-round-trip"

    timer_record = next(
        rec for rec in caplog.records if '"metric": "battery_seconds"' in rec.message
    )
    timer_payload = json.loads(timer_record.message)
    assert timer_payload["type"] == "observation"
    assert timer_payload["value"] >= 0.0


def test_metrics_collector_silent_by_default(
    caplog: pytest.LogCaptureFixture, monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.delenv("POLYCONN_METRICS", raising=False)
    collector = MetricsCollector()

    with caplog.at_level(logging.INFO, logger="polyconn.metrics"):
        collector.counter("battery_failures", 0)

    assert not [rec for rec in caplog.records if "battery_failures" in rec.message]


def test_metrics_collector_pinned_switch(
    set_env: SetEnv, caplog: pytest.LogCaptureFixture
) -> None:
    set_env("POLYCONN_METRICS", "1")
    assert MetricsCollector().enabled
    assert not MetricsCollector(enabled=False).enabled

    with caplog.at_level(logging.INFO, logger="polyconn.metrics"):
        with MetricsCollector(enabled=False).timer("battery_seconds") as watch:
            pass

    assert watch.seconds >= 0.0
    assert not caplog.records
