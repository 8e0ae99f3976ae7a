# -*- coding: utf-8 -*-
"""図式の正規形と、正規形で同類項をまとめる形式和。

円周は区別されるラベル付き成分なので並べ替えない。各円周の回転の全組み合わせについて
脚を出現順に番号付けし、三価頂点を脚から幅優先で発見して入ってきたスロットが
先頭になるよう回転する。得られた整数列の最小値を正規キーとする。
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, List, Tuple

from .models import Diagram, DiagramParts

CanonicalKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _encode(diagram: Diagram, rotation: Tuple[int, ...]) -> CanonicalKey:
    legs: List[int] = []
    lengths: List[int] = []
    for circle, shift in zip(diagram.circles, rotation):
        lengths.append(len(circle))
        legs.extend(circle[shift:] + circle[:shift])
    number: Dict[int, int] = {leg: index for index, leg in enumerate(legs)}
    base = len(legs)
    order: List[Tuple[int, int, int]] = []

    def explore(entry: int) -> None:
        queue: deque = deque([entry])
        while queue:
            slot = queue.popleft()
            if slot in number:
                continue
            rotated = diagram.rotated_vertex(slot)
            offset = base + 3 * len(order)
            order.append(rotated)
            for position, item in enumerate(rotated):
                number[item] = offset + position
            for item in rotated[1:]:
                neighbour = diagram.mate[item]
                if diagram.is_slot(neighbour) and neighbour not in number:
                    queue.append(neighbour)

    for leg in legs:
        partner = diagram.mate[leg]
        if diagram.is_slot(partner) and partner not in number:
            explore(partner)
    # 脚のない成分 (不正な図式) は頂点の並び順で末尾へ回す
    for slots in diagram.vertices:
        if slots[0] not in number:
            explore(slots[0])

    endpoints = legs + [slot for slots in order for slot in slots]
    return tuple(lengths), tuple(number[diagram.mate[endpoint]] for endpoint in endpoints)


def canonical_key(diagram: Diagram) -> CanonicalKey:
    """内部 ID の付け替えと各円周の回転に関して不変なキー。"""

    choices = [range(len(circle)) if circle else range(1) for circle in diagram.circles]
    return min(_encode(diagram, rotation) for rotation in product(*choices))


def diagram_from_key(key: CanonicalKey) -> Diagram:
    """正規キーから代表図式を復元する。脚は 1..L、スロットはその後に続く ID。"""

    lengths, mates = key
    circles: List[List[int]] = []
    cursor = 1
    for length in lengths:
        circles.append(list(range(cursor, cursor + length)))
        cursor += length
    leg_total = cursor - 1
    slot_total = len(mates) - leg_total
    vertices = [
        (leg_total + 1 + 3 * index, leg_total + 2 + 3 * index, leg_total + 3 + 3 * index)
        for index in range(slot_total // 3)
    ]
    mate = {index + 1: target + 1 for index, target in enumerate(mates)}
    return DiagramParts(circles, list(vertices), mate, len(mates) + 1).freeze()


def canonical_diagram(diagram: Diagram) -> Diagram:
    return diagram_from_key(canonical_key(diagram))


@dataclass
class DiagramSum:
    """正規キー → 有理係数の形式和。係数 0 の項は保持しない。"""

    terms: Dict[CanonicalKey, Fraction] = field(default_factory=dict)

    @classmethod
    def of(cls, items: Iterable[Tuple[Fraction | int, Diagram]]) -> "DiagramSum":
        result = cls()
        for coefficient, diagram in items:
            result.add(diagram, coefficient)
        return result

    def add(self, diagram: Diagram, coefficient: Fraction | int = 1) -> None:
        key = canonical_key(diagram)
        value = self.terms.get(key, Fraction(0)) + Fraction(coefficient)
        if value == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = value

    def extend(self, other: "DiagramSum", scale: Fraction | int = 1) -> None:
        for key, coefficient in other.terms.items():
            value = self.terms.get(key, Fraction(0)) + coefficient * scale
            if value == 0:
                self.terms.pop(key, None)
            else:
                self.terms[key] = value

    def items(self) -> Iterator[Tuple[Fraction, Diagram]]:
        for key in sorted(self.terms):
            yield self.terms[key], diagram_from_key(key)

    def __len__(self) -> int:
        return len(self.terms)

    def mass(self) -> Fraction:
        """係数の絶対値の総和。"""

        return sum((abs(c) for c in self.terms.values()), Fraction(0))


__all__ = [
    "CanonicalKey",
    "DiagramSum",
    "canonical_diagram",
    "canonical_key",
    "diagram_from_key",
]
