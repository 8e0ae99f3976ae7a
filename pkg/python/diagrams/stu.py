# -*- coding: utf-8 -*-
"""STU 展開と、それに基づく総当たりの重み計算 (照合用オラクル)。

脚に隣接する三価頂点 (s0, s1, s2) を、s0 側の脚 L を 2 本の脚に置き換えた
2 項の差 T - U に書き換える。T では L の位置に [x, y]、U では [y, x] を置き、
x は s1 の相手、y は s2 の相手に繋ぐ。
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .canonical import DiagramSum
from .models import Diagram
from .smoothing import chord_weight


def leg_adjacent_slot(diagram: Diagram) -> Optional[int]:
    """円周順で最初の、三価頂点に繋がる脚の相手スロット。"""

    for leg in diagram.legs:
        partner = diagram.mate[leg]
        if diagram.is_slot(partner):
            return partner
    return None


def stu_step(diagram: Diagram, slot: int) -> List[Tuple[int, Diagram]]:
    """スロット ``slot`` (相手は脚) を持つ頂点に STU を 1 回適用した [(+1, T), (-1, U)]。"""

    leg = diagram.mate[slot]
    if not diagram.is_leg(leg):
        raise ValueError(f"スロット {slot} は脚に接続されていません")
    s0, s1, s2 = diagram.rotated_vertex(slot)
    vertex_index = diagram.slot_location[s0][0]
    circle_index, position = diagram.leg_location[leg]

    results: List[Tuple[int, Diagram]] = []
    for sign, swapped in ((1, False), (-1, True)):
        parts = diagram.thaw()
        x, y = parts.fresh(), parts.fresh()
        first, second = parts.mate[s1], parts.mate[s2]
        parts.drop(s0, s1, s2, leg)
        parts.vertices[vertex_index] = None
        if first == s2:
            parts.connect(x, y)
        else:
            parts.connect(x, first)
            parts.connect(y, second)
        circle = parts.circles[circle_index]
        circle[position : position + 1] = [y, x] if swapped else [x, y]
        results.append((sign, parts.freeze()))
    return results


def weight_oracle(diagram: Diagram) -> Fraction:
    """STU を正規化なしで再帰適用し、弦図式の重みを合計する。"""

    slot = leg_adjacent_slot(diagram)
    if slot is None:
        if diagram.vertices:
            # 脚に届かない成分だけが残った図式は重み 0
            return Fraction(0)
        return Fraction(chord_weight(diagram))
    return sum(
        (sign * weight_oracle(term) for sign, term in stu_step(diagram, slot)),
        Fraction(0),
    )


def stu_expand(diagram: Diagram) -> DiagramSum:
    """三価頂点がなくなるまで STU を適用した弦図式の形式和。同型な項はまとめる。"""

    result = DiagramSum()
    pending: List[Tuple[Fraction, Diagram]] = [(Fraction(1), diagram)]
    while pending:
        coefficient, current = pending.pop()
        slot = leg_adjacent_slot(current)
        if slot is None:
            if not current.vertices:
                result.add(current, coefficient)
            continue
        for sign, term in stu_step(current, slot):
            pending.append((coefficient * sign, term))
    return result


__all__ = ["leg_adjacent_slot", "stu_expand", "stu_step", "weight_oracle"]
