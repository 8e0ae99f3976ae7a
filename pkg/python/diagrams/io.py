# -*- coding: utf-8 -*-
"""図式ファイルの読み書き。

行指向の形式::

    circles 2
    circle 1: 1 2
    circle 2: 3 4
    triv 1: a b c
    triv 2: a b c
    edge 1 1.a
    edge 1.b 2.c
    ...

``circle`` 行は円周番号と向きに沿った脚 ID の列、``triv`` 行は頂点番号と巡回順のスロット名、
``edge`` 行は 2 つの端点 (脚 ID または ``頂点.スロット``) を結ぶ。``#`` 以降はコメント。
"""

from __future__ import annotations

from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .errors import DiagramFormatError
from .models import Diagram, DiagramParts


def _fail(number: int, message: str, raw: str) -> DiagramFormatError:
    return DiagramFormatError(f"{number} 行目: {message}: '{raw}'")


def parse_diagram(text: str) -> Diagram:
    declared: Optional[int] = None
    circles: Dict[int, List[str]] = {}
    vertices: Dict[str, List[str]] = {}
    vertex_order: List[str] = []
    edges: List[Tuple[int, str, str, str]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "circles":
            if not rest.isdigit() or int(rest) < 1:
                raise _fail(number, "'circles M' の M は正の整数が必要です", raw)
            declared = int(rest)
        elif keyword in ("circle", "triv"):
            label, colon, body = rest.partition(":")
            label = label.strip()
            if not colon or not label:
                raise _fail(number, f"'{keyword} 番号: ...' の形式ではありません", raw)
            tokens = body.split()
            if keyword == "circle":
                if not label.isdigit():
                    raise _fail(number, "円周番号は正の整数が必要です", raw)
                if int(label) in circles:
                    raise _fail(number, f"円周 {label} が重複しています", raw)
                circles[int(label)] = tokens
            else:
                if len(tokens) != 3 or len(set(tokens)) != 3:
                    raise _fail(number, "三価頂点には相異なる 3 個のスロット名が必要です", raw)
                if label in vertices:
                    raise _fail(number, f"頂点 {label} が重複しています", raw)
                vertices[label] = tokens
                vertex_order.append(label)
        elif keyword == "edge":
            ends = rest.split()
            if len(ends) != 2:
                raise _fail(number, "'edge a b' の形式ではありません", raw)
            edges.append((number, ends[0], ends[1], raw))
        else:
            raise _fail(number, f"未知のキーワード '{keyword}' です", raw)

    if declared is None:
        raise DiagramFormatError("'circles M' 行がありません")
    if sorted(circles) != list(range(1, declared + 1)):
        raise DiagramFormatError(f"circle 行は 1..{declared} を 1 回ずつ含む必要があります")

    parts = DiagramParts([[] for _ in range(declared)], [], {}, 1)
    ids: Dict[str, int] = {}
    for index in range(declared):
        for token in circles[index + 1]:
            if token in ids:
                raise DiagramFormatError(f"脚 ID '{token}' が重複しています")
            ids[token] = parts.fresh()
            parts.circles[index].append(ids[token])
    for label in vertex_order:
        slots = []
        for name in vertices[label]:
            ids[f"{label}.{name}"] = parts.fresh()
            slots.append(ids[f"{label}.{name}"])
        parts.vertices.append((slots[0], slots[1], slots[2]))

    for number, first, second, raw in edges:
        for token in (first, second):
            if token not in ids:
                raise _fail(number, f"端点 '{token}' が定義されていません", raw)
            if ids[token] in parts.mate:
                raise _fail(number, f"端点 '{token}' は既に接続されています", raw)
        if first == second:
            raise _fail(number, "同じ端点同士は結べません", raw)
        parts.connect(ids[first], ids[second])

    diagram = parts.freeze()
    diagram.check_components()
    return diagram


def read_diagram(path: Union[str, Path]) -> Diagram:
    return parse_diagram(Path(path).read_text(encoding="utf-8"))


def format_diagram(diagram: Diagram) -> str:
    """脚を 1..L、スロットを ``頂点.1`` ``頂点.2`` ``頂点.3`` と番号付けし直して書き出す。"""

    names: Dict[int, str] = {}
    lines = [f"circles {diagram.m}"]
    counter = 0
    for index, circle in enumerate(diagram.circles, start=1):
        labels = []
        for leg in circle:
            counter += 1
            names[leg] = str(counter)
            labels.append(names[leg])
        lines.append(f"circle {index}: {' '.join(labels)}".rstrip())
    for index, slots in enumerate(diagram.vertices, start=1):
        for position, slot in enumerate(slots, start=1):
            names[slot] = f"{index}.{position}"
        lines.append(f"triv {index}: 1 2 3")
    written = set()
    for endpoint in list(diagram.legs) + [slot for slots in diagram.vertices for slot in slots]:
        partner = diagram.mate[endpoint]
        if endpoint in written:
            continue
        written.update((endpoint, partner))
        lines.append(f"edge {names[endpoint]} {names[partner]}")
    return "\n".join(lines) + "\n"


__all__ = ["format_diagram", "parse_diagram", "read_diagram"]
