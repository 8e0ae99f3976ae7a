# -*- coding: utf-8 -*-
"""Λ³V の部分空間 W_0 と、それを法とした等号判定。

W_0 は相異なる i, j, k, l について (Y_ijk - Y_ijl) - (Y_jkl - Y_ikl) で張られる。
生成元を sympy で行簡約した基底を持ち、所属判定は厳密な有理数演算で行う。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, List, Mapping, Tuple

import sympy

from exactalg import y_canon

Triple = Tuple[int, int, int]


def _signed(i: int, j: int, k: int) -> Tuple[Triple, int]:
    var, sign = y_canon(i, j, k)
    assert var is not None
    return var.indices, sign  # type: ignore[return-value]


def w0_generators(m: int) -> List[Dict[Triple, int]]:
    generators: List[Dict[Triple, int]] = []
    for quadruple in permutations(range(1, m + 1), 4):
        i, j, k, l = quadruple  # noqa: E741
        vector: Dict[Triple, int] = {}
        for triple, coefficient in (((i, j, k), 1), ((i, j, l), -1), ((j, k, l), -1), ((i, k, l), 1)):
            key, sign = _signed(*triple)
            vector[key] = vector.get(key, 0) + coefficient * sign
        generators.append({key: value for key, value in vector.items() if value})
    return generators


@dataclass(frozen=True)
class W0Subspace:
    m: int
    coordinates: Tuple[Triple, ...]
    basis: Tuple[Tuple[Fraction, ...], ...]
    pivots: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def vector(self, wedges: Mapping[Triple, Fraction]) -> List[Fraction]:
        """(i<j<k) → 係数 の写像を座標ベクトルにする。"""

        index = {triple: position for position, triple in enumerate(self.coordinates)}
        result = [Fraction(0)] * len(self.coordinates)
        for triple, value in wedges.items():
            if value:
                result[index[triple]] += Fraction(value)
        return result

    def reduce(self, wedges: Mapping[Triple, Fraction]) -> List[Fraction]:
        """行簡約基底で掃き出した残差。W_0 に属するときちょうど 0 ベクトル。"""

        residual = self.vector(wedges)
        for row, pivot in zip(self.basis, self.pivots):
            factor = residual[pivot]
            if factor:
                residual = [value - factor * entry for value, entry in zip(residual, row)]
        return residual

    def contains(self, wedges: Mapping[Triple, Fraction]) -> bool:
        return not any(self.reduce(wedges))

    def equivalent(self, first: Mapping[Triple, Fraction], second: Mapping[Triple, Fraction]) -> bool:
        difference: Dict[Triple, Fraction] = dict(first)
        for triple, value in second.items():
            difference[triple] = difference.get(triple, Fraction(0)) - value
        return self.contains(difference)


@lru_cache(maxsize=None)
def w0_subspace(m: int) -> W0Subspace:
    coordinates = tuple(combinations(range(1, m + 1), 3))
    index = {triple: position for position, triple in enumerate(coordinates)}
    rows = []
    for generator in w0_generators(m):
        row = [0] * len(coordinates)
        for triple, value in generator.items():
            row[index[triple]] = value
        rows.append(row)
    if not rows:
        return W0Subspace(m, coordinates, (), ())
    reduced, pivots = sympy.Matrix(rows).rref()
    basis = tuple(
        tuple(Fraction(int(sympy.fraction(entry)[0]), int(sympy.fraction(entry)[1])) for entry in reduced.row(r))
        for r in range(len(pivots))
    )
    return W0Subspace(m, coordinates, basis, tuple(pivots))


__all__ = ["W0Subspace", "w0_generators", "w0_subspace"]
