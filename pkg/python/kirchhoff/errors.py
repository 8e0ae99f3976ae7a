# -*- coding: utf-8 -*-
"""完全グラフ関連の例外定義。"""


class GraphInputError(ValueError):
    """頂点数・辺・連結数行列などグラフ入力が前提を満たさないことを示す例外。"""


__all__ = ["GraphInputError"]
