# -*- coding: utf-8 -*-
"""組紐閉包での絡み目レベルの照合。

スケイン関係、Hoste の定理 (c_i = 0 (i ≤ m-2) かつ c_{m-1} = D_m(ℓ))、
係数の偶奇消滅と再正規化、Markov 移動での不変性を確かめる。
"""

from __future__ import annotations

import logging
import random
from typing import List

from pydantic import BaseModel, Field

from exactalg import series_renormalize
from kirchhoff import kirchhoff_value
from milnor import lemma_relations_check
from utils import log_structured_event, setup_logger, span_context

from .braid import BraidWord, closure_components, linking_matrix, random_braid
from .burau import conway
from .errors import BraidWordError

logger = setup_logger("conway.checks")


def skein_check(braid: BraidWord, position: int) -> bool:
    """∇(L+) - ∇(L-) = z∇(L0)。``position`` は 1 始まりの文字位置。"""

    positive = conway(braid.with_sign(position, True))
    negative = conway(braid.with_sign(position, False))
    smoothed = conway(braid.without(position))
    return positive - negative == smoothed.times_z()


def hoste_check(braid: BraidWord, *, with_weights: bool = False) -> bool:
    """低次係数の消滅と c_{m-1} = D_m(ℓ_ij) を確かめる。

    ``with_weights`` を立てると、同じ連結数行列で重み系側の F_m^(1) も突き合わせる。
    """

    m = len(closure_components(braid))
    nabla = conway(braid)
    linking = linking_matrix(braid)
    low = [index for index in range(m - 1) if nabla.coefficient(index) != 0]
    expected = 1 if m == 1 else kirchhoff_value(linking)
    leading = nabla.coefficient(m - 1)
    passed = not low and leading == expected
    if passed and with_weights and m >= 2:
        passed = lemma_relations_check(linking)
    if not passed:
        log_structured_event(
            logger,
            "hoste relation violated",
            level=logging.WARNING,
            check_name="hoste",
            event_level="violation",
            context={
                "braid": str(braid),
                "conway": nabla.to_text(),
                "nonzero_low": low,
                "expected_leading": str(expected),
            },
        )
    return passed


def parity_and_renorm_check(braid: BraidWord, order: int = 8) -> bool:
    """i ≡ m (mod 2) の c_i が 0 で、再正規化が最低次の非零係数を保つか。"""

    m = len(closure_components(braid))
    nabla = conway(braid)
    parity = all(value == 0 for index, value in enumerate(nabla.coefficients) if index % 2 == m % 2)
    lowest = nabla.lowest_nonzero()
    renormalized = series_renormalize(list(nabla.coefficients), order)
    if lowest is None or lowest[0] > order:
        preserved = all(entry == 0 for entry in renormalized)
    else:
        index, value = lowest
        preserved = all(entry == 0 for entry in renormalized[:index]) and renormalized[index] == value
    return parity and preserved


def markov_check(braid: BraidWord, seed: int = 42, conjugations: int = 3) -> bool:
    """乱択した語による共役と、正負の安定化で ∇ が変わらないか。"""

    rng = random.Random(seed)
    expected = conway(braid)
    variants: List[BraidWord] = [braid.stabilize(True), braid.stabilize(False)]
    for _ in range(conjugations if braid.strands >= 2 else 0):
        length = rng.randint(1, 4)
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, braid.strands - 1) for _ in range(length))
        variants.append(braid.conjugate(BraidWord(braid.strands, letters)))
    return all(conway(variant) == expected for variant in variants)


class BraidSuiteReport(BaseModel):
    """乱択組紐語での性質検査の集計。"""

    check: str
    seed: int
    samples: int = Field(ge=0)
    failures: List[str] = Field(default_factory=list, description="性質を満たさなかった組紐語 (位置付き)。")

    @property
    def passed(self) -> bool:
        return not self.failures


def _check_samples(samples: int) -> None:
    if samples < 0:
        raise BraidWordError(f"サンプル数は 0 以上である必要があります: {samples}")


def skein_suite(samples: int = 200, seed: int = 42, max_strands: int = 4, max_length: int = 10) -> BraidSuiteReport:
    _check_samples(samples)
    rng = random.Random(seed)
    report = BraidSuiteReport(check="skein", seed=seed, samples=samples)
    with span_context("skein_suite", check_name="skein", run_seed=seed, event_level="progress"):
        for _ in range(samples):
            braid = random_braid(rng, max_strands, max_length)
            position = rng.randint(1, len(braid))
            if not skein_check(braid, position):
                report.failures.append(f"{braid} @ {position}")
    _log_suite(report)
    return report


def hoste_suite(
    samples: int = 200,
    seed: int = 42,
    max_strands: int = 4,
    max_length: int = 12,
    *,
    with_weights: bool = False,
) -> BraidSuiteReport:
    _check_samples(samples)
    rng = random.Random(seed)
    report = BraidSuiteReport(check="hoste", seed=seed, samples=samples)
    with span_context("hoste_suite", check_name="hoste", run_seed=seed, event_level="progress"):
        for _ in range(samples):
            braid = random_braid(rng, max_strands, max_length)
            if not hoste_check(braid, with_weights=with_weights):
                report.failures.append(str(braid))
    _log_suite(report)
    return report


def _log_suite(report: BraidSuiteReport) -> None:
    log_structured_event(
        logger,
        f"{report.check} suite finished",
        level=logging.INFO if report.passed else logging.WARNING,
        check_name=report.check,
        run_seed=report.seed,
        event_level="progress" if report.passed else "violation",
        context={"samples": report.samples, "failures": len(report.failures)},
    )


__all__ = [
    "BraidSuiteReport",
    "hoste_check",
    "hoste_suite",
    "markov_check",
    "parity_and_renorm_check",
    "skein_check",
    "skein_suite",
]
