# -*- coding: utf-8 -*-
"""重み系側の計算と行列式側の計算をつなぐ照合。"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional

from diagrams import Diagram, DiagramFormatError, Engine, h_replace as thread_edge, profile_components
from kirchhoff import LinkingMatrix, kirchhoff_value, laplacian_linking, reduced_det
from utils import log_structured_event, setup_logger

from .fpoly import F
from .phi import F_general
from .xi import XiElement

logger = setup_logger("milnor.checks")


def xi_from_linking(linking: LinkingMatrix) -> XiElement:
    """連結数行列から次数 1 の ξ = Σ_{i<j} ℓ_ij strut(i, j) を作る。"""

    values = {
        (i, j): Fraction(linking.entry(i, j).constant_value())
        for i in range(1, linking.m + 1)
        for j in range(i + 1, linking.m + 1)
    }
    return XiElement.from_struts(linking.m, values)


def lemma_relations_check(linking: LinkingMatrix, *, engine: Engine = "reduced") -> bool:
    """F_m^(1)(ξ_1) を重み系・φ 経由・Kirchhoff 多項式・簡約行列式の 4 通りで求めて比べる。"""

    m = linking.m
    xi = xi_from_linking(linking)
    via_weight = F(xi, m, engine=engine)
    via_phi = Fraction(F_general(1, m, xi))
    via_trees = Fraction(kirchhoff_value(linking))
    laplacian = laplacian_linking(linking)
    via_det = {p: Fraction(reduced_det(laplacian, p).constant_value()) for p in range(1, m + 1)}
    passed = via_weight == via_phi == via_trees and all(value == via_trees for value in via_det.values())
    log_structured_event(
        logger,
        "degree-one lemma relations checked",
        level=logging.INFO if passed else logging.WARNING,
        check_name="lemma-relations",
        event_level="progress" if passed else "violation",
        context={
            "m": m,
            "weight": str(via_weight),
            "phi": str(via_phi),
            "kirchhoff": str(via_trees),
            "det": {p: str(value) for p, value in via_det.items()},
        },
    )
    return passed


def h_replace(diagram: Diagram, endpoint: Optional[int] = None) -> Diagram:
    """H 型成分 ⁱ_ℓH^k_j の内部辺に新しい円周 0 を挟み、Y_0jk と Y_0ℓi に置き換える。

    ``endpoint`` を省略すると、次数 3 の木成分のうち最初のものの内部辺を使う。
    """

    if endpoint is None:
        profile = profile_components(diagram)
        for shape, component in zip(profile.components, diagram.components()):
            if shape.kind != "tree" or shape.degree != 3:
                continue
            vertex_indices = [index for kind, index in component if kind == "V"]
            for slot in diagram.vertices[min(vertex_indices)]:
                if diagram.is_slot(diagram.mate[slot]):
                    endpoint = slot
                    break
            break
        if endpoint is None:
            raise DiagramFormatError("H 型 (次数 3 の木) の成分が見つかりません")
    return thread_edge(diagram, endpoint)


__all__ = ["h_replace", "lemma_relations_check", "xi_from_linking"]
