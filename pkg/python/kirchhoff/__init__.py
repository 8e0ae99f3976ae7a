# -*- coding: utf-8 -*-
"""完全グラフの全域木と Kirchhoff 多項式。"""

from .errors import GraphInputError
from .laplacian import (
    LinkingMatrix,
    kirchhoff_poly,
    kirchhoff_value,
    laplacian_linking,
    mtt_check,
    reduced_det,
)
from .trees import (
    Edge,
    EdgeSet,
    prufer_decode,
    spanning_trees_brute_force,
    spanning_trees_complete,
)

__all__ = [
    "Edge",
    "EdgeSet",
    "GraphInputError",
    "LinkingMatrix",
    "kirchhoff_poly",
    "kirchhoff_value",
    "laplacian_linking",
    "mtt_check",
    "prufer_decode",
    "reduced_det",
    "spanning_trees_brute_force",
    "spanning_trees_complete",
]
