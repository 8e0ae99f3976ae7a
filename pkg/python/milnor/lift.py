# -*- coding: utf-8 -*-
"""ラベル付き木の族を m 本の円周上の図式へ持ち上げる。"""

from __future__ import annotations

import random
from typing import Dict, Optional, Sequence

from diagrams import Diagram, DiagramParts

from .errors import TreeFormatError
from .trees import LabeledTree, TreeGraph


def lift_to_circles(trees: Sequence[LabeledTree], m: int, seed: Optional[int] = None) -> Diagram:
    """ラベル i の葉を円周 i の脚にした図式。

    ``seed`` が None なら脚は木の並び順に円周へ追加し、整数なら各円周上の脚の順序を
    その seed でシャッフルする。三価頂点のスロット順は木の巡回順 (親, 左, 右) に従う。
    """

    parts = DiagramParts([[] for _ in range(m)], [], {}, 1)
    for tree in trees:
        if tree.max_label > m:
            raise TreeFormatError(f"木 {tree} のラベルが円周数 m={m} を超えています")
        graph = TreeGraph.from_tree(tree)
        endpoint: Dict[tuple, int] = {}
        for node, label in graph.labels.items():
            leg = parts.fresh()
            parts.circles[label - 1].append(leg)
            endpoint[(node, graph.adjacency[node][0])] = leg
        for vertex in graph.vertices:
            slots = (parts.fresh(), parts.fresh(), parts.fresh())
            parts.vertices.append(slots)
            for slot, neighbour in zip(slots, graph.adjacency[vertex]):
                endpoint[(vertex, neighbour)] = slot
        for (node, neighbour), own in endpoint.items():
            if node < neighbour:
                parts.connect(own, endpoint[(neighbour, node)])
    if seed is not None:
        rng = random.Random(seed)
        for circle in parts.circles:
            rng.shuffle(circle)
    return parts.freeze()


__all__ = ["lift_to_circles"]
