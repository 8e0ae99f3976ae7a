# -*- coding: utf-8 -*-
"""3-グラフ関連の例外定義。"""


class ThreeGraphInputError(ValueError):
    """3 辺の頂点重複・範囲外の頂点・不正な μ 表など入力の不備を示す例外。"""


class TreeCriterionError(RuntimeError):
    """2 通りの木判定 (接続グラフと m-巡回置換) が食い違ったことを示す例外。"""


__all__ = ["ThreeGraphInputError", "TreeCriterionError"]
