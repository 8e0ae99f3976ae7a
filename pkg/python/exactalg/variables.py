# -*- coding: utf-8 -*-
"""対称変数 x[i,j] と交代変数 y[i,j,k] の正規化。

x は添字の入れ替えで不変、y は添字の互換で符号が反転し、添字が重複すると 0 になる。
正規形は常に添字の昇順タプルで保持する。
"""

from __future__ import annotations

from typing import Literal, NamedTuple, Optional, Sequence, Tuple

from .errors import InvalidVariableError

VarKind = Literal["x", "y"]

_ARITY = {"x": 2, "y": 3}


class VarId(NamedTuple):
    """正規化済みの変数識別子。``indices`` は狭義単調増加。"""

    kind: str
    indices: Tuple[int, ...]

    def to_text(self) -> str:
        return f"{self.kind}[{','.join(str(i) for i in self.indices)}]"

    def __str__(self) -> str:  # noqa: D401
        return self.to_text()


def _permutation_sign(values: Sequence[int]) -> int:
    """重複のない整数列を昇順に並べる置換の符号。"""

    sign = 1
    items = list(values)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def _check_positive(indices: Sequence[int]) -> None:
    for index in indices:
        if not isinstance(index, int) or index < 1:
            raise InvalidVariableError(f"変数の添字は正の整数である必要があります: {tuple(indices)}")


def x_var(i: int, j: int) -> VarId:
    """x[i,j] (= x[j,i]) を返す。対角成分は存在しないため例外とする。"""

    _check_positive((i, j))
    if i == j:
        raise InvalidVariableError(f"x 変数の添字が重複しています: ({i},{j})")
    return VarId("x", (min(i, j), max(i, j)))


def y_canon(i: int, j: int, k: int) -> Tuple[Optional[VarId], int]:
    """y[i,j,k] を正規形と符号に分解する。

    添字が重複する場合は ``(None, 0)`` を返す (y_iij = 0)。
    """

    _check_positive((i, j, k))
    if i == j or j == k or i == k:
        return None, 0
    ordered = tuple(sorted((i, j, k)))
    return VarId("y", ordered), _permutation_sign((i, j, k))


def y_var(i: int, j: int, k: int) -> VarId:
    """既に昇順であることが分かっている y 変数を生成する。"""

    var, _ = y_canon(i, j, k)
    if var is None or var.indices != (i, j, k):
        raise InvalidVariableError(f"y 変数の添字は相異なる昇順である必要があります: ({i},{j},{k})")
    return var


def parse_variable(text: str) -> VarId:
    """``x[1,2]`` / ``y[1,2,3]`` 形式の文字列を VarId に変換する。"""

    raw = text.strip()
    if len(raw) < 4 or raw[0] not in _ARITY or raw[1] != "[" or raw[-1] != "]":
        raise InvalidVariableError(f"変数表記を解釈できません: '{text}'")
    try:
        indices = tuple(int(part) for part in raw[2:-1].split(","))
    except ValueError as exc:
        raise InvalidVariableError(f"変数表記を解釈できません: '{text}'") from exc
    if len(indices) != _ARITY[raw[0]]:
        raise InvalidVariableError(f"変数の添字数が不正です: '{text}'")
    if raw[0] == "x":
        return x_var(*indices)
    return y_var(*indices)


__all__ = ["VarId", "VarKind", "parse_variable", "x_var", "y_canon", "y_var"]
