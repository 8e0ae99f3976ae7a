# -*- coding: utf-8 -*-
"""図式に対する局所的な書き換え (AS, IHX, 2 脚 wheel の追加, 円周の挿入)。

どの書き換えも重み W との関係が決まっている:

- ``apply_as``: 頂点の巡回順を反転すると W は符号反転
- ``ihx_terms``: 3 項の W の和は 0
- ``insert_wheel2``: 平面的な 2 脚 wheel 成分を足すと W は -2 倍
- ``h_replace``: 破線の途中に脚 2 本の円周を挟んでも W は (通過符号を除き) 不変
"""

from __future__ import annotations

from typing import List, Tuple

from .errors import DiagramFormatError
from .models import Diagram


def apply_as(diagram: Diagram, vertex: int) -> Diagram:
    """頂点 ``vertex`` (0 始まり) の巡回順を反転した図式。係数 -1 で元の図式と等しい。"""

    if not 0 <= vertex < len(diagram.vertices):
        raise DiagramFormatError(f"頂点番号 {vertex} が範囲外です")
    parts = diagram.thaw()
    a, b, c = diagram.vertices[vertex]
    parts.vertices[vertex] = (a, c, b)
    return parts.freeze()


def ihx_terms(diagram: Diagram, slot: int) -> List[Diagram]:
    """スロット ``slot`` から出る内部辺の IHX 3 項。

    辺の両端を u=(e,a,b), w=(f,c,d) とし、外側の端点を A..D と書くと
    E(A,B|C,D), E(A,C|D,B), E(A,D|B,C) を返す。3 項の重みの和は 0。
    """

    partner = diagram.mate.get(slot)
    if partner is None or not diagram.is_slot(slot) or not diagram.is_slot(partner):
        raise DiagramFormatError(f"スロット {slot} は内部辺の端点ではありません")
    e, a, b = diagram.rotated_vertex(slot)
    f, c, d = diagram.rotated_vertex(partner)
    own = {e, a, b, f, c, d}
    outer = [diagram.mate[x] for x in (a, b, c, d)]
    if any(endpoint in own for endpoint in outer):
        raise DiagramFormatError("二重辺または自己ループを含む辺には IHX を適用できません")
    u_index = diagram.slot_location[e][0]
    w_index = diagram.slot_location[f][0]
    big_a, big_b, big_c, big_d = outer

    groupings: Tuple[Tuple[int, int, int, int], ...] = (
        (big_a, big_b, big_c, big_d),
        (big_a, big_c, big_d, big_b),
        (big_a, big_d, big_b, big_c),
    )
    terms: List[Diagram] = []
    for p, q, r, s in groupings:
        parts = diagram.thaw()
        parts.drop(*own)
        e2, p2, q2 = parts.fresh(), parts.fresh(), parts.fresh()
        f2, r2, s2 = parts.fresh(), parts.fresh(), parts.fresh()
        parts.vertices[u_index] = (e2, p2, q2)
        parts.vertices[w_index] = (f2, r2, s2)
        parts.connect(e2, f2)
        for new, old in ((p2, p), (q2, q), (r2, r), (s2, s)):
            parts.connect(new, old)
        terms.append(parts.freeze())
    return terms


def insert_wheel2(
    diagram: Diagram,
    circle_a: int,
    position_a: int,
    circle_b: int,
    position_b: int,
) -> Diagram:
    """円周 ``circle_a``, ``circle_b`` (1 始まり) の指定位置に脚を持つ平面的な 2 脚 wheel を足す。

    位置は挿入位置で、2 本目は 1 本目を挿入した後の円周に対して解釈する。
    """

    for circle in (circle_a, circle_b):
        if not 1 <= circle <= diagram.m:
            raise DiagramFormatError(f"円周番号 {circle} が範囲外です")
    parts = diagram.thaw()
    leg_a, leg_b = parts.fresh(), parts.fresh()
    for leg, circle, position in ((leg_a, circle_a, position_a), (leg_b, circle_b, position_b)):
        target = parts.circles[circle - 1]
        if not 0 <= position <= len(target):
            raise DiagramFormatError(f"円周 {circle} への挿入位置 {position} が範囲外です")
        target.insert(position, leg)
    t, s1, s2 = parts.fresh(), parts.fresh(), parts.fresh()
    t_prime, t1, t2 = parts.fresh(), parts.fresh(), parts.fresh()
    parts.vertices.extend([(t, s1, s2), (t_prime, t1, t2)])
    parts.connect(t, leg_a)
    parts.connect(t_prime, leg_b)
    parts.connect(s1, t2)
    parts.connect(s2, t1)
    return parts.freeze()


def h_replace(diagram: Diagram, endpoint: int) -> Diagram:
    """``endpoint`` を含む破線の途中に、脚 2 本の新しい円周 (番号 0) を先頭に挿入する。

    H 型成分の内部辺に適用すると、2 つの Y 成分が新しい円周を共有する図式になる。
    """

    partner = diagram.mate.get(endpoint)
    if partner is None:
        raise DiagramFormatError(f"端点 {endpoint} は図式に含まれていません")
    parts = diagram.thaw()
    p, q = parts.fresh(), parts.fresh()
    parts.connect(endpoint, p)
    parts.connect(partner, q)
    parts.circles.insert(0, [p, q])
    return parts.freeze()


__all__ = ["apply_as", "h_replace", "ihx_terms", "insert_wheel2"]
