# -*- coding: utf-8 -*-
"""検証ジョブ向けの構造化ロギングユーティリティ。

各レコードにはチェック名・乱数シード・イベント種別を付与し、JSON 1 行で出力する。
イベント種別は progress / calibration / violation / fault の 4 種を用いる。
"""

from __future__ import annotations

import json
import logging
import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, Mapping, Optional

from opentelemetry import trace
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor
from opentelemetry.exporter.otlp.proto.http.trace_exporter import OTLPSpanExporter
from opentelemetry.sdk.trace.sampling import ParentBased, TraceIdRatioBased
from opentelemetry.trace import Span, Status, StatusCode

DEFAULT_SERVICE_NAME = "conway-trees"
EVENT_LEVELS = ("progress", "calibration", "violation", "fault")


@dataclass(frozen=True)
class StructuredLogContext:
    """ログ出力時に付与する検証ジョブのメタデータ。"""

    check_name: Optional[str] = None
    run_seed: Optional[int] = None
    event_level: Optional[str] = None

    def merge(
        self,
        *,
        check_name: Optional[str] = None,
        run_seed: Optional[int] = None,
        event_level: Optional[str] = None,
    ) -> "StructuredLogContext":
        """既存の文脈に新しい値をマージしたコンテキストを返す。未知のイベント種別は ValueError。"""

        if event_level and event_level not in EVENT_LEVELS:
            raise ValueError(f"未知のイベント種別です: {event_level} ({'/'.join(EVENT_LEVELS)})")
        return StructuredLogContext(
            check_name=check_name or self.check_name,
            run_seed=run_seed if run_seed is not None else self.run_seed,
            event_level=event_level or self.event_level,
        )


def _initial_context() -> StructuredLogContext:
    return StructuredLogContext()


_LOG_CONTEXT: ContextVar[StructuredLogContext] = ContextVar(
    "check_log_context", default=_initial_context()
)


_TRACER_PROVIDER: Optional[TracerProvider] = None


def _configure_tracer_provider(service_name: str) -> TracerProvider:
    """TracerProvider を 1 度だけ初期化する。

    OTLP への送信は ``OTEL_EXPORTER_OTLP_ENABLED`` を明示的に有効化した場合のみ行う。
    検証はオフラインで走らせることが多いため既定は無効。
    """

    global _TRACER_PROVIDER
    if _TRACER_PROVIDER:
        return _TRACER_PROVIDER

    enabled_raw = os.getenv("OTEL_EXPORTER_OTLP_ENABLED", "0")
    enabled = str(enabled_raw).strip().lower() not in ("0", "false", "no", "off", "")

    endpoint = os.getenv("OTEL_EXPORTER_OTLP_ENDPOINT", "http://localhost:4318").strip()
    sampler_ratio_raw = os.getenv("OTEL_TRACES_SAMPLER_RATIO", "1.0")
    try:
        sampler_ratio = max(0.0, min(1.0, float(sampler_ratio_raw)))
    except ValueError:
        sampler_ratio = 1.0

    provider = TracerProvider(
        resource=Resource.create({"service.name": service_name}),
        sampler=ParentBased(TraceIdRatioBased(sampler_ratio)),
    )
    if enabled and endpoint:
        exporter = OTLPSpanExporter(endpoint=endpoint)
        provider.add_span_processor(BatchSpanProcessor(exporter))
    trace.set_tracer_provider(provider)
    _TRACER_PROVIDER = provider
    return provider


def get_tracer(name: str = DEFAULT_SERVICE_NAME) -> trace.Tracer:
    """TracerProvider を確実に初期化した上で tracer を取得する。"""

    provider = trace.get_tracer_provider()
    if isinstance(provider, TracerProvider):
        return provider.get_tracer(name)

    _configure_tracer_provider(service_name=name)
    return trace.get_tracer(name)


class StructuredLogFormatter(logging.Formatter):
    """チェック名・シードを含む JSON ログを整形するフォーマッタ。"""

    def format(self, record: logging.LogRecord) -> str:  # noqa: D401
        context = _LOG_CONTEXT.get()
        record_seed = getattr(record, "run_seed", None)
        payload: Dict[str, Any] = {
            "timestamp": self.formatTime(record, self.datefmt),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "event_level": getattr(record, "event_level", None) or context.event_level,
            "check_name": getattr(record, "check_name", None) or context.check_name,
            "run_seed": record_seed if record_seed is not None else context.run_seed,
        }

        structured_context = getattr(record, "structured_context", None)
        if structured_context:
            payload["context"] = _serialize_context(structured_context)

        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        if record.stack_info:
            payload["stack"] = self.formatStack(record.stack_info)

        compact = {key: value for key, value in payload.items() if value is not None}
        return json.dumps(compact, ensure_ascii=False, sort_keys=False)


def _serialize_context(value: Any) -> Any:
    """ログ用にコンテキスト値を再帰的にシリアライズする。分数や多項式は文字列化する。"""

    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, Mapping):
        return {str(k): _serialize_context(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_serialize_context(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    to_text = getattr(value, "to_text", None)
    if callable(to_text):
        return to_text()
    return str(value)


def _resolve_log_level(raw_value: str | None, fallback: int = logging.INFO) -> int:
    """``CONWAY_LOG_LEVEL`` の値 (名前または数値) をログレベルへ変換する。"""

    if not raw_value or not raw_value.strip():
        return fallback
    text = raw_value.strip().upper()
    if text.isdigit():
        return int(text)
    resolved = logging.getLevelName("WARNING" if text == "WARN" else text)
    return resolved if isinstance(resolved, int) else fallback


def setup_logger(name: str = DEFAULT_SERVICE_NAME, level: int | None = None) -> logging.Logger:
    """検証メタデータを付与する JSON ロガーを構築する。"""

    _configure_tracer_provider(service_name=DEFAULT_SERVICE_NAME)
    logger = logging.getLogger(name)

    env_level = _resolve_log_level(os.getenv("CONWAY_LOG_LEVEL"), fallback=logging.INFO)
    effective_level = level if level is not None else env_level

    logger.setLevel(effective_level)
    stale_structured_handlers = [
        handler
        for handler in logger.handlers
        if isinstance(handler, logging.StreamHandler)
        and isinstance(handler.formatter, StructuredLogFormatter)
    ]
    for handler in stale_structured_handlers:
        logger.removeHandler(handler)
        handler.close()

    handler = logging.StreamHandler()
    handler.setLevel(effective_level)
    handler.setFormatter(StructuredLogFormatter(datefmt="%Y-%m-%dT%H:%M:%S"))
    logger.addHandler(handler)
    if not hasattr(logger, "tracer"):
        logger.tracer = get_tracer(name)
    return logger


def get_current_log_context() -> StructuredLogContext:
    """現在のログ文脈を取得する。"""

    return _LOG_CONTEXT.get()


def clear_check_context() -> None:
    """ログ文脈を初期状態へ戻す。"""

    _LOG_CONTEXT.set(_initial_context())


@contextmanager
def check_log_context(
    *,
    check_name: Optional[str] = None,
    run_seed: Optional[int] = None,
    event_level: Optional[str] = None,
) -> Iterator[StructuredLogContext]:
    """チェック単位のログ文脈をスコープ限定で適用する。"""

    base = _LOG_CONTEXT.get()
    merged = base.merge(check_name=check_name, run_seed=run_seed, event_level=event_level)
    token = _LOG_CONTEXT.set(merged)
    try:
        yield merged
    finally:
        _LOG_CONTEXT.reset(token)


def _span_attributes(
    context: StructuredLogContext, structured: Optional[Mapping[str, Any]] = None
) -> Dict[str, Any]:
    """検証文脈と、構造化コンテキストのうちスカラーに直せる値を ``check.*`` 属性にする。"""

    attributes: Dict[str, Any] = {
        "check.name": context.check_name,
        "check.seed": context.run_seed,
        "check.event_level": context.event_level,
    }
    for key, value in (structured or {}).items():
        serialized = _serialize_context(value)
        if isinstance(serialized, (str, int, float, bool)):
            attributes[f"check.{key}"] = serialized
    return {key: value for key, value in attributes.items() if value is not None}


def _annotate_span(span: Span, attributes: Mapping[str, Any]) -> None:
    if span.is_recording():
        span.set_attributes(dict(attributes))


@contextmanager
def span_context(
    name: str,
    *,
    check_name: Optional[str] = None,
    run_seed: Optional[int] = None,
    event_level: Optional[str] = None,
    attributes: Optional[Mapping[str, Any]] = None,
    service_name: str = DEFAULT_SERVICE_NAME,
):
    """ログ文脈と OpenTelemetry span を同時に生成するコンテキスト。

    例外発生時には StatusCode を ERROR へ設定し、例外情報を記録した上で再送出する。
    """

    tracer = get_tracer(service_name)
    with check_log_context(
        check_name=check_name,
        run_seed=run_seed,
        event_level=event_level,
    ) as context:
        with tracer.start_as_current_span(name) as span:
            _annotate_span(span, _span_attributes(context, attributes))
            try:
                yield span
            except Exception as exc:  # pragma: no cover - 例外経路はロガーで検証
                span.record_exception(exc)
                span.set_status(Status(status_code=StatusCode.ERROR, description=str(exc)))
                raise


def log_structured_event(
    logger: logging.Logger,
    message: str,
    *,
    level: int = logging.INFO,
    check_name: Optional[str] = None,
    run_seed: Optional[int] = None,
    event_level: Optional[str] = None,
    context: Optional[Mapping[str, Any]] = None,
    exc_info: Any = None,
) -> None:
    """検証文脈付きで構造化ログを出力する高水準ヘルパー。"""

    extra: Dict[str, Any] = {}
    if context:
        extra["structured_context"] = context
    if check_name:
        extra["check_name"] = check_name
    if run_seed is not None:
        extra["run_seed"] = run_seed
    if event_level:
        extra["event_level"] = event_level

    with check_log_context(check_name=check_name, run_seed=run_seed, event_level=event_level):
        logger.log(level, message, extra=extra, exc_info=exc_info)

    # violation / fault は span イベントとして残し、それ以外は属性の更新だけにする
    span = trace.get_current_span()
    merged = _LOG_CONTEXT.get().merge(check_name=check_name, run_seed=run_seed, event_level=event_level)
    attributes = _span_attributes(merged, context)
    if event_level in ("violation", "fault"):
        if span.is_recording():
            span.add_event(message, attributes=attributes)
    else:
        _annotate_span(span, attributes)


__all__ = [
    "DEFAULT_SERVICE_NAME",
    "EVENT_LEVELS",
    "StructuredLogContext",
    "StructuredLogFormatter",
    "check_log_context",
    "clear_check_context",
    "get_current_log_context",
    "get_tracer",
    "log_structured_event",
    "setup_logger",
    "span_context",
]
