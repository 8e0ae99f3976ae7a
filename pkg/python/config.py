# -*- coding: utf-8 -*-
"""検証コマンドの設定読み込み処理。

乱数シードやサンプル数など環境変数で調整する値を 1 箇所で正規化し、
不正値は既定値へ戻して警告を返す。"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, List, Literal, Mapping, MutableSequence, Tuple

from utils import setup_logger

logger = setup_logger("conway.config")

_DEFAULT_SEED = 42
_DEFAULT_DIAGRAM_SAMPLES = 500
_DEFAULT_VANISH_SAMPLES = 1000
_DEFAULT_BRAID_SAMPLES = 200
_DEFAULT_PM7_SAMPLES = 100
_DEFAULT_PHI_SAMPLES = 200
_DEFAULT_SERIES_ORDER = 8
_DEFAULT_WEIGHT_ENGINE = "reduced"
_WEIGHT_ENGINES = ("oracle", "reduced")

WeightEngine = Literal["oracle", "reduced"]


@dataclass(frozen=True)
class CheckConfig:
    """検証・生成コマンドが参照する既定値の集合。CLI の引数が優先される。"""

    seed: int
    diagram_samples: int  # 重み系の総当たりと簡約エンジンの突き合わせ件数
    vanish_samples: int
    braid_samples: int
    pm7_samples: int  # m=7 の P_7² = det Λ^(p) を乱択 μ 表で確かめる件数
    phi_samples: int
    series_order: int
    weight_engine: WeightEngine


@dataclass(frozen=True)
class ConfigLoadResult:
    """設定読み込み結果と警告一覧のペア。"""

    config: CheckConfig
    warnings: List[str]


def _collect_warnings(container: MutableSequence[str], items: Iterable[str]) -> None:
    for message in items:
        container.append(message)


def _parse_non_negative_int(name: str, raw: str | None, default: int) -> Tuple[int, List[str]]:
    """0 以上の整数を安全に解析する。"""

    warnings: List[str] = []

    if raw is None or raw.strip() == "":
        return default, warnings

    try:
        value = int(raw)
        if value < 0:
            raise ValueError
        return value, warnings
    except ValueError:
        warnings.append(f"{name}='{raw}' が不正なため {default} を使用します。")
        return default, warnings


def _parse_engine(raw: str | None) -> Tuple[WeightEngine, List[str]]:
    warnings: List[str] = []

    if raw is None or raw.strip() == "":
        return _DEFAULT_WEIGHT_ENGINE, warnings  # type: ignore[return-value]

    lowered = raw.strip().lower()
    if lowered in _WEIGHT_ENGINES:
        return lowered, warnings  # type: ignore[return-value]
    warnings.append(
        f"CONWAY_WEIGHT_ENGINE='{raw}' は {'/'.join(_WEIGHT_ENGINES)} のいずれでもないため "
        f"{_DEFAULT_WEIGHT_ENGINE} を使用します。"
    )
    return _DEFAULT_WEIGHT_ENGINE, warnings  # type: ignore[return-value]


def load_check_config(env: Mapping[str, str] | None = None) -> ConfigLoadResult:
    """プロセス環境から検証コマンドの設定を読み取る。"""

    source = os.environ if env is None else env
    warnings: List[str] = []

    seed, seed_warnings = _parse_non_negative_int("CONWAY_SEED", source.get("CONWAY_SEED"), _DEFAULT_SEED)
    diagram_samples, diagram_warnings = _parse_non_negative_int(
        "CONWAY_DIAGRAM_SAMPLES", source.get("CONWAY_DIAGRAM_SAMPLES"), _DEFAULT_DIAGRAM_SAMPLES
    )
    vanish_samples, vanish_warnings = _parse_non_negative_int(
        "CONWAY_VANISH_SAMPLES", source.get("CONWAY_VANISH_SAMPLES"), _DEFAULT_VANISH_SAMPLES
    )
    braid_samples, braid_warnings = _parse_non_negative_int(
        "CONWAY_BRAID_SAMPLES", source.get("CONWAY_BRAID_SAMPLES"), _DEFAULT_BRAID_SAMPLES
    )
    pm7_samples, pm7_warnings = _parse_non_negative_int(
        "CONWAY_PM7_SAMPLES", source.get("CONWAY_PM7_SAMPLES"), _DEFAULT_PM7_SAMPLES
    )
    phi_samples, phi_warnings = _parse_non_negative_int(
        "CONWAY_PHI_SAMPLES", source.get("CONWAY_PHI_SAMPLES"), _DEFAULT_PHI_SAMPLES
    )
    series_order, order_warnings = _parse_non_negative_int(
        "CONWAY_SERIES_ORDER", source.get("CONWAY_SERIES_ORDER"), _DEFAULT_SERIES_ORDER
    )
    weight_engine, engine_warnings = _parse_engine(source.get("CONWAY_WEIGHT_ENGINE"))

    _collect_warnings(warnings, seed_warnings)
    _collect_warnings(warnings, diagram_warnings)
    _collect_warnings(warnings, vanish_warnings)
    _collect_warnings(warnings, braid_warnings)
    _collect_warnings(warnings, pm7_warnings)
    _collect_warnings(warnings, phi_warnings)
    _collect_warnings(warnings, order_warnings)
    _collect_warnings(warnings, engine_warnings)

    config = CheckConfig(
        seed=seed,
        diagram_samples=diagram_samples,
        vanish_samples=vanish_samples,
        braid_samples=braid_samples,
        pm7_samples=pm7_samples,
        phi_samples=phi_samples,
        series_order=series_order,
        weight_engine=weight_engine,
    )

    for warning in warnings:
        logger.warning(warning)

    return ConfigLoadResult(config=config, warnings=warnings)


__all__ = ["CheckConfig", "ConfigLoadResult", "WeightEngine", "load_check_config"]
