# -*- coding: utf-8 -*-
"""組紐語と Conway 多項式関連の例外定義。"""


class BraidWordError(ValueError):
    """組紐語の表記・生成元の添字・文字位置が前提を満たさないことを示す例外。"""


__all__ = ["BraidWordError"]
