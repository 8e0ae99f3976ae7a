# -*- coding: utf-8 -*-
"""μ 表と ξ ファイルの読み書き。

μ 表は 1 行 1 値で ``mu i1 i2 ... = v``。ξ ファイルは
``tree <次数> <木の表記> * <有理数>`` の行の並びで、任意で ``labels M`` 行により
ラベル上限 m を指定する (省略時は最大ラベル)。``#`` 以降はコメント。
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .errors import DegreeMismatchError, TreeFormatError
from .trees import LabeledTree, parse_tree
from .xi import XiElement


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line, raw


def parse_mu_table(text: str) -> Dict[Tuple[int, ...], int]:
    table: Dict[Tuple[int, ...], int] = {}
    length: Optional[int] = None
    for number, line, raw in _lines(text):
        left, equals, right = line.partition("=")
        tokens = left.split()
        if not equals or len(tokens) < 3 or tokens[0] != "mu":
            raise TreeFormatError(f"{number} 行目: 'mu i1 ... = v' の形式ではありません: '{raw}'")
        try:
            key = tuple(int(token) for token in tokens[1:])
            value = int(right.strip())
        except ValueError as exc:
            raise TreeFormatError(f"{number} 行目: 整数として解釈できません: '{raw}'") from exc
        if any(index < 1 for index in key):
            raise TreeFormatError(f"{number} 行目: 添字は正の整数である必要があります: '{raw}'")
        if length is not None and len(key) != length:
            raise DegreeMismatchError(f"{number} 行目: 添字列の長さが他の行 ({length}) と異なります: '{raw}'")
        length = len(key)
        if key in table and table[key] != value:
            raise TreeFormatError(f"{number} 行目: μ{key} が矛盾する値で再定義されています")
        table[key] = value
    return table


def read_mu_table(path: Union[str, Path]) -> Dict[Tuple[int, ...], int]:
    return parse_mu_table(Path(path).read_text(encoding="utf-8"))


def parse_xi(text: str, m: Optional[int] = None) -> XiElement:
    items: List[Tuple[Fraction, LabeledTree]] = []
    degree: Optional[int] = None
    declared = m
    for number, line, raw in _lines(text):
        if line.startswith("labels"):
            tokens = line.split()
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise TreeFormatError(f"{number} 行目: 'labels M' の形式ではありません: '{raw}'")
            declared = declared or int(tokens[1])
            continue
        head, star, coefficient_text = line.partition("*")
        tokens = head.split()
        if not star or len(tokens) != 3 or tokens[0] != "tree" or not tokens[1].isdigit():
            raise TreeFormatError(f"{number} 行目: 'tree <次数> <木> * <係数>' の形式ではありません: '{raw}'")
        try:
            coefficient = Fraction(coefficient_text.strip())
        except ValueError as exc:
            raise TreeFormatError(f"{number} 行目: 係数を有理数として解釈できません: '{raw}'") from exc
        try:
            tree = parse_tree(tokens[2])
        except TreeFormatError as exc:
            raise TreeFormatError(f"{number} 行目: {exc}") from exc
        if tree.degree != int(tokens[1]):
            raise DegreeMismatchError(f"{number} 行目: 木 {tree} の次数は {tree.degree} で、宣言 {tokens[1]} と異なります")
        if degree is not None and tree.degree != degree:
            raise DegreeMismatchError(f"{number} 行目: 次数 {tree.degree} が他の行 ({degree}) と異なります")
        degree = tree.degree
        items.append((coefficient, tree))
    if degree is None:
        raise TreeFormatError("tree 行が 1 つも含まれていません")
    bound = declared or max(tree.max_label for _, tree in items)
    return XiElement.of(degree, bound, items)


def read_xi_file(path: Union[str, Path], m: Optional[int] = None) -> XiElement:
    return parse_xi(Path(path).read_text(encoding="utf-8"), m)


def format_xi(xi: XiElement) -> str:
    return "\n".join([f"labels {xi.m}", *xi.to_lines()]) + "\n"


__all__ = ["format_xi", "parse_mu_table", "parse_xi", "read_mu_table", "read_xi_file"]
