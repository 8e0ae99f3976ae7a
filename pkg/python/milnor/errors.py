# -*- coding: utf-8 -*-
"""Milnor 不変量の木表現まわりの例外定義。"""


class TreeFormatError(ValueError):
    """木の文字列表現や μ 表・ξ ファイルの書式が不正であることを示す例外。"""


class DegreeMismatchError(ValueError):
    """多重線形形式に渡した ξ の次数や個数が前提と一致しないことを示す例外。"""


class UnsupportedAssemblyError(ValueError):
    """多項式としての組み立てが未対応の (n, m) を要求されたことを示す例外。"""


__all__ = ["DegreeMismatchError", "TreeFormatError", "UnsupportedAssemblyError"]
