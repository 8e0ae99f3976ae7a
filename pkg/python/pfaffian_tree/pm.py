# -*- coding: utf-8 -*-
"""Pfaffian 木多項式 P_m と、三重 Milnor 数から作る交代行列 Λ の照合。"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from exactalg import (
    Coefficient,
    ExactMatrix,
    Monomial,
    Polynomial,
    VarId,
    det_exact,
    pfaffian,
    y_canon,
    y_var,
)
from utils import log_structured_event, setup_logger

from .errors import ThreeGraphInputError
from .three_graph import Triple, epsilon

logger = setup_logger("pfaffian_tree")


@lru_cache(maxsize=None)
def pfaffian_tree_poly(m: int) -> Polynomial:
    """P_m = Σ_T ε(T) y_T。偶数 m では 0。"""

    if m < 2:
        raise ThreeGraphInputError(f"頂点数は 2 以上である必要があります: m={m}")
    if m % 2 == 0:
        return Polynomial()
    size = (m - 1) // 2
    vertices = frozenset(range(1, m + 1))
    terms: Dict[Monomial, Coefficient] = {}
    for chosen in combinations(combinations(range(1, m + 1), 3), size):
        # 全域木は各頂点をちょうど覆うため、被覆しない組は巡回判定の前に除く
        if frozenset(v for triple in chosen for v in triple) != vertices:
            continue
        sign = epsilon(chosen, m)
        if sign:
            terms[Monomial(tuple(y_var(*triple) for triple in chosen))] = sign
    return Polynomial(terms)


@dataclass(frozen=True)
class MuTable:
    """昇順 3 つ組 → μ_ijk の表。成分は整数定数または記号 y[i,j,k]。"""

    m: int
    values: Mapping[Triple, Polynomial] = field(default_factory=dict)

    @classmethod
    def from_integers(cls, m: int, values: Mapping[Tuple[int, int, int], int]) -> "MuTable":
        """任意順の添字を反対称性で正規化して取り込む。矛盾する重複指定は例外。"""

        table: Dict[Triple, Polynomial] = {}
        for (i, j, k), value in values.items():
            if max(i, j, k) > m:
                raise ThreeGraphInputError(f"μ の添字 ({i},{j},{k}) が範囲 1..{m} の外にあります")
            var, sign = y_canon(i, j, k)
            if var is None:
                if value:
                    raise ThreeGraphInputError(f"添字が重複する μ_({i},{j},{k}) は 0 である必要があります")
                continue
            triple: Triple = var.indices  # type: ignore[assignment]
            normalized = Polynomial.constant(sign * value)
            if triple in table and table[triple] != normalized:
                raise ThreeGraphInputError(f"μ_{triple} が矛盾する値で複数回指定されています")
            table[triple] = normalized
        return cls(m, table)

    @classmethod
    def symbolic(cls, m: int) -> "MuTable":
        return cls(
            m,
            {triple: Polynomial.variable(y_var(*triple)) for triple in combinations(range(1, m + 1), 3)},
        )

    @classmethod
    def random(cls, m: int, rng: random.Random, bound: int = 3) -> "MuTable":
        return cls(
            m,
            {
                triple: Polynomial.constant(rng.randint(-bound, bound))
                for triple in combinations(range(1, m + 1), 3)
            },
        )

    def get(self, i: int, j: int, k: int) -> Polynomial:
        """添字の並べ替えに反対称な参照。重複添字は 0。"""

        var, sign = y_canon(i, j, k)
        if var is None:
            return Polynomial()
        value = self.values.get(var.indices, Polynomial())  # type: ignore[arg-type]
        return value if sign > 0 else -value

    def as_assignment(self) -> Dict[VarId, Coefficient]:
        """y[i,j,k] へ μ_ijk を代入する割り当て。整数表専用。"""

        return {
            y_var(*triple): self.values.get(triple, Polynomial()).constant_value()
            for triple in combinations(range(1, self.m + 1), 3)
        }


def lambda_skew(mu: MuTable) -> ExactMatrix:
    """λ_ij = Σ_k μ_ijk の m×m 交代行列。"""

    def entry(i: int, j: int) -> Polynomial:
        if i == j:
            return Polynomial()
        total = Polynomial()
        for k in range(1, mu.m + 1):
            total = total + mu.get(i + 1, j + 1, k)
        return total

    return ExactMatrix.from_function(mu.m, entry)


@dataclass(frozen=True)
class PfaffianCheckResult:
    """pmtt 照合の結果。``signs`` は p ごとの s_p (P_m = s_p·Pf(Λ^(p)))。"""

    m: int
    passed: bool
    signs: Dict[int, int]
    failures: List[str]


def _compare_instance(
    target: Polynomial,
    matrix: ExactMatrix,
    m: int,
    signs: Dict[int, int],
    failures: List[str],
    label: str,
) -> None:
    square = target * target
    for p in range(1, m + 1):
        minor = matrix.minor(p)
        if det_exact(minor) != square:
            failures.append(f"{label}: det Λ^({p}) != P_{m}^2")
            continue
        if m % 2 == 0:
            continue
        pf = pfaffian(minor)
        if target.is_zero():
            continue
        if pf == target:
            observed = 1
        elif pf == -target:
            observed = -1
        else:
            failures.append(f"{label}: Pf Λ^({p}) != ±P_{m}")
            continue
        previous = signs.setdefault(p, observed)
        if previous != observed:
            failures.append(f"{label}: s_{p} が {previous} から {observed} に変化しました")


def run_pmtt(
    m: int, *, samples: int = 100, seed: int = 42, symbolic: Optional[bool] = None
) -> PfaffianCheckResult:
    """P_m^2 = det Λ^(p) と P_m = s_p·Pf(Λ^(p)) を確かめる。

    m <= 5 では記号的に、それ以外では乱数整数表 ``samples`` 個で数値的に照合する。
    """

    use_symbolic = m <= 5 if symbolic is None else symbolic
    target = pfaffian_tree_poly(m)
    signs: Dict[int, int] = {}
    failures: List[str] = []
    if use_symbolic:
        _compare_instance(target, lambda_skew(MuTable.symbolic(m)), m, signs, failures, "symbolic")
    else:
        rng = random.Random(seed)
        for index in range(samples):
            table = MuTable.random(m, rng)
            value = Polynomial.constant(target.evaluate(table.as_assignment()))
            _compare_instance(value, lambda_skew(table), m, signs, failures, f"sample {index}")

    passed = not failures
    log_structured_event(
        logger,
        "pfaffian matrix-tree check finished",
        level=logging.INFO if passed else logging.WARNING,
        check_name="pmtt",
        run_seed=None if use_symbolic else seed,
        event_level="progress" if passed else "violation",
        context={
            "m": m,
            "mode": "symbolic" if use_symbolic else "numeric",
            "signs": signs,
            "failures": failures[:5],
        },
    )
    return PfaffianCheckResult(m=m, passed=passed, signs=dict(sorted(signs.items())), failures=failures)


def pmtt_check(m: int, *, samples: int = 100, seed: int = 42) -> bool:
    return run_pmtt(m, samples=samples, seed=seed).passed


def pfaffian_sign_table(m: int, *, samples: int = 20, seed: int = 42) -> Dict[int, int]:
    """経験的に定まる s_p の表。"""

    return run_pmtt(m, samples=samples, seed=seed).signs


def evaluate_pm(m: int, mu: MuTable) -> Coefficient:
    """整数 μ 表での P_m の値。"""

    return pfaffian_tree_poly(m).evaluate(mu.as_assignment())


def triples_of(monomial: Monomial) -> List[Triple]:
    """y 変数のみからなる単項式を 3 つ組の列へ変換する。"""

    triples: List[Triple] = []
    for factor in monomial.factors:
        if factor.kind != "y":
            raise ThreeGraphInputError(f"y 変数以外の因子が含まれています: {factor.to_text()}")
        triples.append(factor.indices)  # type: ignore[arg-type]
    return triples


def monomial_of(triples: Sequence[Triple]) -> Monomial:
    return Monomial.of(y_var(*triple) for triple in triples)


__all__ = [
    "MuTable",
    "PfaffianCheckResult",
    "evaluate_pm",
    "lambda_skew",
    "monomial_of",
    "pfaffian_sign_table",
    "pfaffian_tree_poly",
    "pmtt_check",
    "run_pmtt",
    "triples_of",
]
