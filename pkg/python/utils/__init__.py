# -*- coding: utf-8 -*-
"""ユーティリティ集約モジュール。

ロギング関連の機能をまとめて公開し、各パッケージからは
`from utils import setup_logger` の形で参照する。
"""

from .logging import (
    EVENT_LEVELS,
    StructuredLogContext,
    check_log_context,
    clear_check_context,
    get_current_log_context,
    get_tracer,
    log_structured_event,
    setup_logger,
    span_context,
)

__all__ = [
    "EVENT_LEVELS",
    "StructuredLogContext",
    "check_log_context",
    "clear_check_context",
    "get_current_log_context",
    "get_tracer",
    "log_structured_event",
    "setup_logger",
    "span_context",
]
