# -*- coding: utf-8 -*-
"""厳密演算モジュール共通の例外定義。"""


class InvalidVariableError(ValueError):
    """変数の添字が不正 (重複・非正値・種別違い) であることを示す例外。"""


class NotSkewSymmetricError(ValueError):
    """交代行列を要求する演算に非交代行列や奇数次元行列が渡されたことを示す例外。"""


class MatrixIndexError(ValueError):
    """行列の行・列番号が範囲外であることを示す例外。"""


class SeriesCompositionError(ValueError):
    """定数項が 0 でない級数を内側に合成しようとしたことを示す例外。"""


__all__ = [
    "InvalidVariableError",
    "MatrixIndexError",
    "NotSkewSymmetricError",
    "SeriesCompositionError",
]
