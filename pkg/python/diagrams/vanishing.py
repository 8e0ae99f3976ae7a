# -*- coding: utf-8 -*-
"""消滅補題の走査と、弦図式に関する全域木の補題の全数検査。

消滅補題: 次数 n 未満の木成分を持たない次数 d ≤ n(m-1)+1 の図式 D について、
D がちょうど m-1 個の成分を持ちその全てが次数 n 以上の木である場合を除き W(D) = 0。
さらに d ≡ m (mod 2) なら常に W(D) = 0。
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from itertools import combinations_with_replacement, permutations, product
from typing import Dict, List, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, Field

from utils import log_structured_event, setup_logger, span_context

from .errors import ScanParameterError
from .generator import ComponentSpec, random_diagram, random_shape
from .io import format_diagram
from .models import Diagram, chord_diagram
from .profile import ComponentProfile, profile_components
from .reduction import Engine, weight
from .smoothing import chord_weight

logger = setup_logger("diagrams.vanishing")

MAX_RECORDED_COUNTEREXAMPLES = 20


class Counterexample(BaseModel):
    profile: str
    weight: str
    diagram: str


class VanishingReport(BaseModel):
    """``vanishing_scan`` の結果。``counterexamples`` が空なら補題と矛盾なし。"""

    n: int
    m: int
    d: int
    seed: int
    engine: str
    samples: int = Field(ge=0)
    nonzero: int = Field(default=0, ge=0, description="W ≠ 0 だった図式の数。")
    allowed_shape: int = Field(default=0, ge=0, description="m-1 個の次数 n 以上の木からなる図式の数。")
    profiles: Dict[str, int] = Field(default_factory=dict)
    counterexample_count: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample_count == 0


def is_allowed_shape(profile: ComponentProfile, n: int, m: int) -> bool:
    """ちょうど m-1 個の成分が全て次数 n 以上の木であるか。"""

    trees = profile.trees()
    return (
        len(profile.components) == m - 1
        and len(trees) == m - 1
        and all(shape.degree >= n for shape in trees)
    )


def must_vanish(profile: ComponentProfile, n: int, m: int, d: int) -> bool:
    if (d - m) % 2 == 0:
        return True
    return not is_allowed_shape(profile, n, m)


def _allowed_specs(n: int, m: int, d: int, rng: random.Random) -> List[ComponentSpec]:
    """m-1 個の木で次数 d を作る。各木の次数は n 以上。"""

    sizes = [n] * (m - 1)
    for _ in range(d - n * (m - 1)):
        sizes[rng.randrange(m - 1)] += 1
    return [ComponentSpec("tree", size) for size in sizes]


def vanishing_scan(
    n: int,
    m: int,
    d: int,
    samples: int,
    seed: int = 42,
    engine: Engine = "reduced",
) -> VanishingReport:
    """ランダム図式で消滅補題を検査する。

    3 割程度の標本は補題の例外となる形 (m-1 個の木) から選び、非零値が実際に現れることも確かめる。
    """

    if n < 1 or m < 2 or d < 1:
        raise ScanParameterError(f"n >= 1, m >= 2, d >= 1 が必要です: n={n}, m={m}, d={d}")
    if d > n * (m - 1) + 1:
        raise ScanParameterError(f"次数 d={d} が上限 n(m-1)+1={n * (m - 1) + 1} を超えています")

    rng = random.Random(seed)
    report = VanishingReport(n=n, m=m, d=d, seed=seed, engine=engine, samples=samples)
    profiles: Counter = Counter()
    can_hit_allowed = d >= n * (m - 1)

    with span_context("vanishing_scan", check_name="vanish-scan", run_seed=seed, event_level="progress"):
        for _ in range(samples):
            if can_hit_allowed and rng.random() < 0.3:
                specs = _allowed_specs(n, m, d, rng)
            else:
                specs = random_shape(d, rng, min_tree_degree=n)
            diagram = random_diagram(m, specs, rng)
            profile = profile_components(diagram)
            profiles[profile.summary()] += 1
            value = weight(diagram, engine)
            if value != 0:
                report.nonzero += 1
            if is_allowed_shape(profile, n, m):
                report.allowed_shape += 1
            if value != 0 and must_vanish(profile, n, m, d):
                report.counterexample_count += 1
                if len(report.counterexamples) < MAX_RECORDED_COUNTEREXAMPLES:
                    report.counterexamples.append(
                        Counterexample(
                            profile=profile.summary(),
                            weight=str(value),
                            diagram=format_diagram(diagram),
                        )
                    )
                log_structured_event(
                    logger,
                    "vanishing lemma violated",
                    level=logging.WARNING,
                    event_level="violation",
                    context={"profile": profile.summary(), "weight": str(value)},
                )

    report.profiles = dict(sorted(profiles.items()))
    log_structured_event(
        logger,
        "vanishing scan finished",
        check_name="vanish-scan",
        run_seed=seed,
        event_level="progress",
        context={
            "n": n,
            "m": m,
            "d": d,
            "samples": samples,
            "nonzero": report.nonzero,
            "counterexamples": report.counterexample_count,
        },
    )
    return report


class ChordSpanningReport(BaseModel):
    m: int
    checked: int = 0
    spanning: int = 0
    mismatches: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def _cyclic_orders(labels: Sequence[int]) -> List[Tuple[int, ...]]:
    """先頭を固定した巡回順の全列挙。同じラベルが 2 回現れる場合も区別して並べる。"""

    if len(labels) <= 1:
        return [tuple(labels)]
    head, rest = labels[0], labels[1:]
    return sorted({(head,) + order for order in permutations(rest)})


def chord_spanning_check(m: int) -> ChordSpanningReport:
    """m-1 本の弦を持つ全ての弦図式で、W = 1 と縮約多重グラフが全域木であることの一致を確かめる。"""

    if not 2 <= m <= 4:
        raise ScanParameterError(f"全数検査は 2 <= m <= 4 のみ対応します: m={m}")
    report = ChordSpanningReport(m=m)
    pairs = [(i, j) for i in range(1, m + 1) for j in range(i, m + 1)]
    for chords in combinations_with_replacement(pairs, m - 1):
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(1, m + 1))
        graph.add_edges_from(chords)
        spanning = nx.is_tree(graph)
        per_circle: List[List[int]] = [[] for _ in range(m)]
        for label, (i, j) in enumerate(chords):
            per_circle[i - 1].append(label)
            per_circle[j - 1].append(label)
        for orders in product(*(_cyclic_orders(labels) for labels in per_circle)):
            diagram: Diagram = chord_diagram(m, [list(order) for order in orders])
            value = chord_weight(diagram)
            report.checked += 1
            if spanning:
                report.spanning += 1
            if value != (1 if spanning else 0):
                report.mismatches.append(f"chords={list(chords)} orders={list(orders)} W={value}")
    log_structured_event(
        logger,
        "chord spanning lemma checked",
        check_name="chord-spanning",
        event_level="violation" if report.mismatches else "progress",
        level=logging.WARNING if report.mismatches else logging.INFO,
        context={"m": m, "checked": report.checked, "mismatches": len(report.mismatches)},
    )
    return report


__all__ = [
    "ChordSpanningReport",
    "Counterexample",
    "VanishingReport",
    "chord_spanning_check",
    "is_allowed_shape",
    "must_vanish",
    "vanishing_scan",
]
