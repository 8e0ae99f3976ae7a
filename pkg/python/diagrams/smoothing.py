# -*- coding: utf-8 -*-
"""弦の平滑化と、弦図式上の Alexander-Conway 重み。

弦 (p, q) の平滑化は、向きに沿って p に着いたら q へ飛び、q の次から進む経路で
円周を繋ぎ替える。全ての弦を平滑化した後の円周数を m' とすると W = [m' = 1]。
"""

from __future__ import annotations

from typing import List

from .errors import NonChordDiagramError
from .models import Diagram


def _successor_map(diagram: Diagram) -> dict:
    successor = {}
    for circle in diagram.circles:
        for position, leg in enumerate(circle):
            successor[leg] = circle[(position + 1) % len(circle)]
    return successor


def smooth_all_chords(diagram: Diagram) -> int:
    """全ての弦を平滑化した後の円周数 m'。"""

    if not diagram.is_chord_diagram():
        raise NonChordDiagramError(
            f"三価頂点を {diagram.trivalent_count} 個含む図式は平滑化できません"
        )
    successor = _successor_map(diagram)
    # π(p) = succ(mate(p)) の巡回の数が脚を通る円周の数
    seen = set()
    cycles = 0
    for leg in diagram.legs:
        if leg in seen:
            continue
        cycles += 1
        current = leg
        while current not in seen:
            seen.add(current)
            current = successor[diagram.mate[current]]
    empty = sum(1 for circle in diagram.circles if not circle)
    return cycles + empty


def chord_weight(diagram: Diagram) -> int:
    """弦図式の重み。平滑化で円周が 1 本になるとき 1、それ以外は 0。"""

    return 1 if smooth_all_chords(diagram) == 1 else 0


def smooth_chord(diagram: Diagram, leg: int) -> Diagram:
    """脚 ``leg`` を端点とする弦 1 本だけを平滑化した図式。他の構造はそのまま残す。"""

    other = diagram.mate[leg]
    if not (diagram.is_leg(leg) and diagram.is_leg(other)):
        raise NonChordDiagramError(f"端点 {leg} は弦の端点ではありません")
    first_circle, first_position = diagram.leg_location[leg]
    second_circle, second_position = diagram.leg_location[other]
    parts = diagram.thaw()
    parts.drop(leg, other)
    if first_circle == second_circle:
        circle = parts.circles[first_circle]
        rotated = circle[first_position:] + circle[:first_position]
        split = rotated.index(other)
        # [p, X, q, Y] → X と Y の 2 本
        parts.circles[first_circle] = rotated[1:split]
        parts.circles.append(rotated[split + 1 :])
        return parts.freeze()

    first = parts.circles[first_circle]
    second = parts.circles[second_circle]
    first_rotated = first[first_position:] + first[:first_position]
    second_rotated = second[second_position:] + second[:second_position]
    merged: List[int] = second_rotated[1:] + first_rotated[1:]
    keep, remove = sorted((first_circle, second_circle))
    parts.circles[keep] = merged
    del parts.circles[remove]
    return parts.freeze()


__all__ = ["chord_weight", "smooth_all_chords", "smooth_chord"]
