# -*- coding: utf-8 -*-
"""簡約規則による Alexander-Conway 重みの高速計算。

規則は次の順で最初に当てはまるものを適用する。探索は円周番号、脚の位置の小さい順。

1. 脚のない円周: m = 1 で他に何もなければ 1、それ以外は 0
2. 自己ループ (tadpole) を持つ頂点: 0
3. 3 つの隣接点が全て三価頂点である頂点: 0
4. 2 頂点を結ぶ二重辺 (bubble): 外側の端が頂点なら 0、両方脚なら定数倍して成分ごと除去
5. 弦: 平滑化
6. 内部辺: 4 項の辺規則 (bubble を経由した項だけが残る形に展開済み)
7. 脚 1 本の円周は 0、脚 2 本の円周は取り除いて両側の破線を繋ぐ
8. それ以外: STU を 1 回

規則 4, 6, 7 の符号は図から転記せず、総当たりオラクルとの比較で起動時に決定する。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Literal, Optional, Tuple

from utils import log_structured_event, setup_logger

from .canonical import CanonicalKey, canonical_key, diagram_from_key
from .errors import CalibrationError
from .models import Diagram, DiagramBuilder
from .smoothing import smooth_chord
from .stu import leg_adjacent_slot, stu_step, weight_oracle

logger = setup_logger("diagrams.reduction")

Engine = Literal["oracle", "reduced"]


@dataclass(frozen=True)
class ResolvedRuleTable:
    """オラクルとの照合で確定した簡約規則の定数。"""

    edge_sign: int
    bubble_planar: int
    bubble_crossed: int
    relb_sign: int


# ---- 規則用の部品 ------------------------------------------------------
def _find_bubble(diagram: Diagram) -> Optional[Tuple[int, int]]:
    """2 本の辺で結ばれた頂点対の (u の外側スロット, w の外側スロット)。"""

    for slots in diagram.vertices:
        partners: dict = {}
        for slot in slots:
            neighbour = diagram.mate[slot]
            if diagram.is_slot(neighbour):
                other = diagram.slot_location[neighbour][0]
                partners.setdefault(other, []).append(slot)
        for other, shared in partners.items():
            if len(shared) == 2:
                outer_u = next(s for s in slots if s not in shared)
                joined = {diagram.mate[s] for s in shared}
                outer_w = next(s for s in diagram.vertices[other] if s not in joined)
                return outer_u, outer_w
    return None


def _remove_bubble(diagram: Diagram, outer_u: int, outer_w: int) -> Tuple[bool, Diagram]:
    """2 脚の wheel を脚ごと取り除く。戻り値の真偽は平面的な向きかどうか。"""

    t, s1, s2 = diagram.rotated_vertex(outer_u)
    t_prime, t1, t2 = diagram.rotated_vertex(outer_w)
    planar = diagram.mate[s1] == t2
    parts = diagram.thaw()
    for slot in (t, t_prime):
        parts.vertices[diagram.slot_location[slot][0]] = None
    leg_u, leg_w = diagram.mate[t], diagram.mate[t_prime]
    parts.drop(t, s1, s2, t_prime, t1, t2)
    parts.remove_leg(leg_u)
    parts.remove_leg(leg_w)
    return planar, parts.freeze()


def _first_chord_leg(diagram: Diagram) -> Optional[int]:
    for leg in diagram.legs:
        if diagram.is_leg(diagram.mate[leg]):
            return leg
    return None


def _first_internal_edge(diagram: Diagram) -> Optional[int]:
    for slots in diagram.vertices:
        for slot in slots:
            if diagram.is_slot(diagram.mate[slot]):
                return slot
    return None


def edge_rule_terms(diagram: Diagram, slot: int) -> List[Tuple[int, Diagram]]:
    """内部辺 (u=(e,a,b), w=(f,c,d)) での符号 σ_E を除いた展開項。

    J(x, y) は x, y の相手同士を繋ぎ、K(x, y) は相手が両方脚のときその 2 脚を消す。
    どちらかが頂点なら項は 0 になるので返さない。
    """

    e, a, b = diagram.rotated_vertex(slot)
    f, c, d = diagram.rotated_vertex(diagram.mate[slot])
    pattern = (
        (1, (a, d), (b, c)),
        (1, (b, c), (a, d)),
        (-1, (a, c), (b, d)),
        (-1, (b, d), (a, c)),
    )
    u_index = diagram.slot_location[e][0]
    w_index = diagram.slot_location[f][0]
    terms: List[Tuple[int, Diagram]] = []
    for sign, (x, y), (z, w) in pattern:
        killed = (diagram.mate[z], diagram.mate[w])
        if not all(diagram.is_leg(leg) for leg in killed):
            continue
        parts = diagram.thaw()
        parts.vertices[u_index] = None
        parts.vertices[w_index] = None
        joined = (diagram.mate[x], diagram.mate[y])
        parts.drop(e, a, b, f, c, d)
        for leg in killed:
            parts.remove_leg(leg)
        parts.connect(*joined)
        terms.append((sign, parts.freeze()))
    return terms


def _join_through_circle(diagram: Diagram, circle_index: int) -> Diagram:
    """脚 2 本の円周を取り除き、両脚の相手同士を直接繋ぐ。"""

    p, q = diagram.circles[circle_index]
    parts = diagram.thaw()
    first, second = diagram.mate[p], diagram.mate[q]
    parts.drop(p, q)
    del parts.circles[circle_index]
    parts.connect(first, second)
    return parts.freeze()


def _has_tadpole(diagram: Diagram) -> bool:
    return any(diagram.mate[slot] in slots for slots in diagram.vertices for slot in slots)


def _has_inner_vertex(diagram: Diagram) -> bool:
    return any(all(diagram.is_slot(diagram.mate[slot]) for slot in slots) for slots in diagram.vertices)


# ---- 簡約エンジン本体 ----------------------------------------------------
def _reduce(diagram: Diagram, rules: ResolvedRuleTable) -> Fraction:
    if any(not circle for circle in diagram.circles):
        bare = diagram.m == 1 and not diagram.vertices
        return Fraction(1 if bare else 0)
    if _has_tadpole(diagram) or _has_inner_vertex(diagram):
        return Fraction(0)

    bubble = _find_bubble(diagram)
    if bubble is not None:
        outer_u, outer_w = bubble
        if diagram.is_slot(diagram.mate[outer_u]) or diagram.is_slot(diagram.mate[outer_w]):
            return Fraction(0)
        planar, rest = _remove_bubble(diagram, outer_u, outer_w)
        factor = rules.bubble_planar if planar else rules.bubble_crossed
        return factor * _weight_of_key(canonical_key(rest))

    chord_leg = _first_chord_leg(diagram)
    if chord_leg is not None:
        return _weight_of_key(canonical_key(smooth_chord(diagram, chord_leg)))

    edge_slot = _first_internal_edge(diagram)
    if edge_slot is not None:
        total = sum(
            (sign * _weight_of_key(canonical_key(term)) for sign, term in edge_rule_terms(diagram, edge_slot)),
            Fraction(0),
        )
        return rules.edge_sign * total

    for index, circle in enumerate(diagram.circles):
        if len(circle) == 1:
            return Fraction(0)
    if diagram.m >= 2:
        for index, circle in enumerate(diagram.circles):
            if len(circle) == 2:
                joined = _join_through_circle(diagram, index)
                return rules.relb_sign * _weight_of_key(canonical_key(joined))

    slot = leg_adjacent_slot(diagram)
    if slot is None:
        return Fraction(0)
    return sum(
        (sign * _weight_of_key(canonical_key(term)) for sign, term in stu_step(diagram, slot)),
        Fraction(0),
    )


@lru_cache(maxsize=200_000)
def _weight_of_key(key: CanonicalKey) -> Fraction:
    return _reduce(diagram_from_key(key), resolved_rule_table())


def weight_reduced(diagram: Diagram) -> Fraction:
    """簡約規則による重み。値は weight_oracle と一致する。"""

    return _weight_of_key(canonical_key(diagram))


def weight(diagram: Diagram, engine: Engine = "reduced") -> Fraction:
    if engine == "oracle":
        return weight_oracle(diagram)
    if engine == "reduced":
        return weight_reduced(diagram)
    raise ValueError(f"未知の評価エンジンです: {engine}")


# ---- 符号の決定 ----------------------------------------------------------
def bubble_reference(planar: bool) -> Diagram:
    """円周 1 本上の 2 脚 wheel。"""

    builder = DiagramBuilder(1)
    t, s1, s2 = builder.vertex()
    t_prime, t1, t2 = builder.vertex()
    builder.connect(t, builder.leg(1))
    builder.connect(t_prime, builder.leg(1))
    if planar:
        builder.connect(s1, t2)
        builder.connect(s2, t1)
    else:
        builder.connect(s1, t1)
        builder.connect(s2, t2)
    return builder.build()


def h_reference() -> Diagram:
    """u=(e,a,b), w=(f,c,d) で a, c が円周 1、b, d が円周 2 の H 字図式。"""

    builder = DiagramBuilder(2)
    e, a, b = builder.vertex()
    f, c, d = builder.vertex()
    builder.connect(e, f)
    builder.connect(a, builder.leg(1))
    builder.connect(c, builder.leg(1))
    builder.connect(b, builder.leg(2))
    builder.connect(d, builder.leg(2))
    return builder.build()


def relb_reference() -> Diagram:
    """h_reference の内部辺に脚 2 本の第 3 円周を挟んだ図式。"""

    builder = DiagramBuilder(3)
    u2, u0, u1 = builder.vertex()
    w2, w0, w1 = builder.vertex()
    builder.connect(u0, builder.leg(1))
    builder.connect(w0, builder.leg(1))
    builder.connect(u1, builder.leg(2))
    builder.connect(w1, builder.leg(2))
    builder.connect(u2, builder.leg(3))
    builder.connect(w2, builder.leg(3))
    return builder.build()


def _unit(value: Fraction, allowed: Tuple[int, ...], name: str) -> int:
    if value.denominator != 1 or int(value) not in allowed:
        raise CalibrationError(f"{name} の値 {value} が候補 {allowed} のいずれでもありません")
    return int(value)


@lru_cache(maxsize=1)
def resolved_rule_table() -> ResolvedRuleTable:
    """参照図式のオラクル値から規則の定数を決定する。失敗時は CalibrationError。"""

    planar = _unit(weight_oracle(bubble_reference(True)), (2, -2), "bubble_planar")
    crossed = _unit(weight_oracle(bubble_reference(False)), (2, -2), "bubble_crossed")
    if planar != -crossed:
        raise CalibrationError(f"bubble の向きによる符号が反転していません: {planar}, {crossed}")

    h_diagram = h_reference()
    edge_slot = h_diagram.vertices[0][0]
    raw = sum(
        (sign * weight_oracle(term) for sign, term in edge_rule_terms(h_diagram, edge_slot)),
        Fraction(0),
    )
    oracle_h = weight_oracle(h_diagram)
    if raw == 0:
        raise CalibrationError("辺規則の参照図式で展開値が 0 になりました")
    edge_sign = _unit(oracle_h / raw, (1, -1), "edge_sign")

    relb_value = weight_oracle(relb_reference())
    relb_sign = _unit(relb_value / oracle_h, (1, -1), "relb_sign")

    table = ResolvedRuleTable(
        edge_sign=edge_sign,
        bubble_planar=planar,
        bubble_crossed=crossed,
        relb_sign=relb_sign,
    )
    log_structured_event(
        logger,
        "reduction rule constants resolved",
        level=logging.DEBUG,
        check_name="rule-calibration",
        event_level="calibration",
        context={
            "edge_sign": edge_sign,
            "bubble_planar": planar,
            "bubble_crossed": crossed,
            "relb_sign": relb_sign,
        },
    )
    return table


__all__ = [
    "Engine",
    "ResolvedRuleTable",
    "bubble_reference",
    "edge_rule_terms",
    "h_reference",
    "relb_reference",
    "resolved_rule_table",
    "weight",
    "weight_oracle",
    "weight_reduced",
]
