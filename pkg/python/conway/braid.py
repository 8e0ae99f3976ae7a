# -*- coding: utf-8 -*-
"""組紐語とその閉包の成分・連結数。

組紐語は ``k=3; 1 -2 1 -2 1 -2`` の形で書く。g は σ_g、-g は σ_g⁻¹ を表す。
閉包の成分は置換の巡回で決まり、最小の紐番号の小さい順に 1, 2, ... と番号付けする。
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from kirchhoff import LinkingMatrix

from .errors import BraidWordError


@dataclass(frozen=True)
class BraidWord:
    """k 本の紐の組紐語。"""

    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise BraidWordError(f"紐の本数は 1 以上である必要があります: k={self.strands}")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise BraidWordError(
                    f"生成元 {letter} は k={self.strands} の範囲 1..{self.strands - 1} にありません"
                )

    @property
    def writhe(self) -> int:
        return sum(1 if letter > 0 else -1 for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise BraidWordError(f"紐の本数が異なる組紐語は連結できません: {self.strands} と {other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-letter for letter in reversed(self.letters)))

    def _check_position(self, position: int) -> int:
        if not 1 <= position <= len(self.letters):
            raise BraidWordError(f"文字位置 {position} は 1..{len(self.letters)} の範囲外です")
        return position - 1

    def with_sign(self, position: int, positive: bool) -> "BraidWord":
        """1 始まりの ``position`` の文字を σ_g (positive) または σ_g⁻¹ に置き換える。"""

        index = self._check_position(position)
        generator = abs(self.letters[index])
        letters = list(self.letters)
        letters[index] = generator if positive else -generator
        return BraidWord(self.strands, tuple(letters))

    def without(self, position: int) -> "BraidWord":
        index = self._check_position(position)
        return BraidWord(self.strands, self.letters[:index] + self.letters[index + 1 :])

    def conjugate(self, other: "BraidWord") -> "BraidWord":
        return other + self + other.inverse()

    def stabilize(self, positive: bool = True) -> "BraidWord":
        """k+1 本目を加え、末尾に σ_k^{±1} を付ける。"""

        letter = self.strands if positive else -self.strands
        return BraidWord(self.strands + 1, self.letters + (letter,))

    def permutation(self) -> Tuple[int, ...]:
        """始点位置 p (0 始まり) の紐が最後に到達する位置の列。"""

        at_position = list(range(self.strands))
        for letter in self.letters:
            g = abs(letter) - 1
            at_position[g], at_position[g + 1] = at_position[g + 1], at_position[g]
        final = [0] * self.strands
        for position, strand in enumerate(at_position):
            final[strand] = position
        return tuple(final)

    def to_text(self) -> str:
        return f"k={self.strands}; " + " ".join(str(letter) for letter in self.letters)

    def __str__(self) -> str:  # noqa: D401
        return self.to_text().rstrip()


def parse_braid(text: str) -> BraidWord:
    """``k=3; 1 -2 1`` 形式を読む。区切りの ``;`` の前後の空白は任意。"""

    head, separator, body = text.strip().partition(";")
    head = head.strip()
    if not separator or not head.startswith("k="):
        raise BraidWordError(f"'k=<本数>; <生成元の列>' の形式ではありません: '{text}'")
    try:
        strands = int(head[2:])
        letters = tuple(int(token) for token in body.split())
    except ValueError as exc:
        raise BraidWordError(f"整数として解釈できない要素があります: '{text}'") from exc
    return BraidWord(strands, letters)


def closure_components(braid: BraidWord) -> List[Tuple[int, ...]]:
    """閉包の成分ごとの紐番号 (1 始まり) の組。最小の紐番号の順に並ぶ。"""

    permutation = braid.permutation()
    seen = [False] * braid.strands
    components: List[Tuple[int, ...]] = []
    for start in range(braid.strands):
        if seen[start]:
            continue
        cycle: List[int] = []
        strand = start
        while not seen[strand]:
            seen[strand] = True
            cycle.append(strand + 1)
            strand = permutation[strand]
        components.append(tuple(sorted(cycle)))
    return components


def linking_numbers_from_word(braid: BraidWord) -> Tuple[LinkingMatrix, Dict[int, int]]:
    """連結数行列と、紐番号 (1 始まり) から成分番号 (1 始まり) への対応を返す。

    異なる成分の紐どうしの交差ごとに ±1/2 を足す。
    """

    component_of: Dict[int, int] = {}
    for number, component in enumerate(closure_components(braid), start=1):
        for strand in component:
            component_of[strand] = number
    m = len(set(component_of.values()))
    totals: Dict[Tuple[int, int], Fraction] = {}
    at_position = list(range(1, braid.strands + 1))
    for letter in braid.letters:
        g = abs(letter) - 1
        left, right = component_of[at_position[g]], component_of[at_position[g + 1]]
        if left != right:
            key = (min(left, right), max(left, right))
            totals[key] = totals.get(key, Fraction(0)) + Fraction(1 if letter > 0 else -1, 2)
        at_position[g], at_position[g + 1] = at_position[g + 1], at_position[g]
    values: Dict[Tuple[int, int], int] = {}
    for key, total in totals.items():
        if total.denominator != 1:
            raise BraidWordError(f"成分 {key} の交差数が奇数です: {braid}")
        values[key] = int(total)
    return LinkingMatrix.from_pairs(m, values), component_of


def linking_matrix(braid: BraidWord) -> LinkingMatrix:
    return linking_numbers_from_word(braid)[0]


def random_braid(rng: random.Random, max_strands: int = 4, max_length: int = 10) -> BraidWord:
    """2..max_strands 本、長さ 1..max_length の一様な乱択組紐語。"""

    strands = rng.randint(2, max_strands)
    length = rng.randint(1, max_length)
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length))
    return BraidWord(strands, letters)


__all__ = [
    "BraidWord",
    "closure_components",
    "linking_matrix",
    "linking_numbers_from_word",
    "parse_braid",
    "random_braid",
]
