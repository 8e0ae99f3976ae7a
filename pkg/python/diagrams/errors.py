# -*- coding: utf-8 -*-
"""図式 (uni-trivalent diagram) 関連の例外定義。"""


class DiagramFormatError(ValueError):
    """図式ファイルや組み立て途中の図式が接続条件を満たさないことを示す例外。"""


class NonChordDiagramError(ValueError):
    """弦図式のみを受け付ける演算に三価頂点を含む図式が渡されたことを示す例外。"""


class ScanParameterError(ValueError):
    """消滅補題の走査パラメータ (n, m, d) が前提を満たさないことを示す例外。"""


class CalibrationError(RuntimeError):
    """簡約規則の符号を総当たり評価から決定できなかったことを示す例外。"""


__all__ = [
    "CalibrationError",
    "DiagramFormatError",
    "NonChordDiagramError",
    "ScanParameterError",
]
